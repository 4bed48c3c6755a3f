"""Standard double bubbles in H3, parameterized by the outer-cap mean-
curvature parameters k = coth r (the native chart of the banded sweeps).

Canonical orientation puts k1 >= k2 (k1 bounds the smaller region); the
separating cap's parameter is k1 - k2, a geodesic plane at 0 and a
horosphere at 1 (the formulas are real on 0 <= k1 - k2 < 1 through the
analytically-real branch; the horosphere boundary itself raises)."""

from __future__ import annotations

from dataclasses import dataclass

from .backend import get_backend
from .enclosure import DEFAULT_PRECISION, Enclosure, pad_upper, SlackConfig
from .errors import DomainError

__all__ = ["SdbCurvaturesH3", "cap_areas_h3", "cap_volumes_h3",
           "sdb_volumes_h3", "sdb_area_h3", "interface_cosh_y"]


@dataclass(frozen=True)
class SdbCurvaturesH3:
    k1: float
    k2: float

    def __post_init__(self):
        if not (self.k1 > 1 and self.k2 > 1):
            raise DomainError("curvature parameters must exceed 1")

    @property
    def canonical(self) -> "SdbCurvaturesH3":
        if self.k1 >= self.k2:
            return self
        return SdbCurvaturesH3(self.k2, self.k1)


def cap_areas_h3(c: SdbCurvaturesH3, *,
                 precision_bits: int = DEFAULT_PRECISION) -> tuple:
    """(a1, a2, a3): smaller region's outer cap, larger region's outer cap,
    separating cap."""
    cc = c.canonical
    d = get_backend(precision_bits).h3_sdb(cc.k1, cc.k2)
    return d["a1"], d["a2"], d["a3"]


def cap_volumes_h3(c: SdbCurvaturesH3, *,
                   precision_bits: int = DEFAULT_PRECISION) -> tuple:
    """(vc1, vc2, vc3): the cap-vs-disk volumes composing the two regions
    (vc3 signed toward the larger region; zero on the geodesic interface)."""
    cc = c.canonical
    d = get_backend(precision_bits).h3_sdb(cc.k1, cc.k2)
    return d["vc1"], d["vc2"], d["vc3"]


def sdb_volumes_h3(c: SdbCurvaturesH3, order: str = "canonical", *,
                   precision_bits: int = DEFAULT_PRECISION) -> tuple[Enclosure, Enclosure]:
    """Region volumes.  order "canonical": (smaller, larger) after the swap;
    order "raw": the k1-cap region first, whatever the input order."""
    cc = c.canonical
    d = get_backend(precision_bits).h3_sdb(cc.k1, cc.k2)
    if order == "canonical" or c.k1 >= c.k2:
        return d["v"], d["w"]
    if order != "raw":
        raise DomainError("order must be 'canonical' or 'raw'")
    return d["w"], d["v"]


def sdb_area_h3(c: SdbCurvaturesH3, certify: bool = False, *,
                slack: SlackConfig | None = None,
                precision_bits: int | None = None):
    """Total cap area; with certify=True returns the padded upper endpoint
    (the + 3 delta margin of the original runs) instead of the enclosure."""
    slack = slack or SlackConfig()
    bits = precision_bits or slack.precision_bits
    cc = c.canonical
    area = get_backend(bits).h3_sdb(cc.k1, cc.k2)["area"]
    if certify:
        return pad_upper(area, 3 * slack.delta)
    return area


def interface_cosh_y(c: SdbCurvaturesH3, *,
                     precision_bits: int = DEFAULT_PRECISION) -> Enclosure:
    """cosh of the interface-disk radius (always below 2)."""
    cc = c.canonical
    return get_backend(precision_bits).h3_sdb(cc.k1, cc.k2)["cosh_y"]
