"""The Hutchings function and its certified halves.

F(v, w) = g(v, w) - h(v, w) with g = 2A(v/2) + A(w) + A(v+w) concave and
h = 2A(v, w) increasing on the relevant domains.  `g_lower_rect` returns a
certified lower bound of g over a volume rectangle, `h_upper_rect` a
certified upper bound of h; positivity of their difference on a tile is what
the proof engine certifies.  `hutchings_point` is the midpoint evaluation
used for plots and asymptotic spot checks only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import fastmath as fm
from .backend import get_backend
from .enclosure import SlackConfig, get_context, pad_lower, pad_upper
from .errors import DomainError, RegionViolation
from .geometry import SpaceTag
from .solvers import (BandTarget, curvature_from_volume, curvatures_for_sdb_h3,
                      radii_equal_volumes_s3, radii_for_sdb_s3,
                      radius_from_volume)


@dataclass(frozen=True)
class VolumePair:
    v: float
    w: float

    def __post_init__(self):
        if not (self.v > 0 and self.w > 0):
            raise DomainError("volumes must be positive")


@dataclass(frozen=True)
class Rect:
    """Axis-aligned volume rectangle [v_lo, v_hi] x [w_lo, w_hi]; coordinates
    may be exact Fractions (the S3 engine keeps them exact)."""

    v_lo: object
    w_lo: object
    v_hi: object
    w_hi: object

    def __post_init__(self):
        if not (self.v_lo < self.v_hi and self.w_lo < self.w_hi):
            raise DomainError("rectangle must have positive extent")


def float_at_or_below(x) -> float:
    """Largest double <= the exact value x (Fraction-safe)."""
    f = float(x)
    if Fraction(f) > Fraction(x):
        return math.nextafter(f, -math.inf)
    return f


def float_at_or_above(x) -> float:
    """Smallest double >= the exact value x (Fraction-safe)."""
    f = float(x)
    if Fraction(f) < Fraction(x):
        return math.nextafter(f, math.inf)
    return f


def critical_ratio() -> float:
    """e^2/4 - 1, the volume ratio at which the large-volume ray limit of F
    vanishes."""
    return math.e ** 2 / 4.0 - 1.0


def limit_along_ray(psi: float) -> float:
    """Limit of F(psi*w, w) as w grows: 2 pi ln(4 (psi + 1) / e^2)."""
    if not psi > 0:
        raise DomainError("psi must be positive")
    return 2 * math.pi * (math.log(4.0 * (psi + 1.0)) - 2.0)


def hutchings_point(space: SpaceTag, p: VolumePair) -> float:
    """Midpoint (non-rigorous) F(v, w)."""
    if space is SpaceTag.S3:
        return fm.hutchings_s3(p.v, p.w)
    if space is SpaceTag.H3:
        return fm.hutchings_h3(p.v, p.w)
    raise DomainError("hutchings_point supports S3 and H3 only")


# ---------------------------------------------------------------------------
# certified single-sphere area bounds
# ---------------------------------------------------------------------------

def single_area_lower(space: SpaceTag, vol, eps: float, *,
                      slack: SlackConfig | None = None) -> float:
    """Certified lower bound on the single-sphere area A(vol).

    S3 volumes are normalized fractions of |S3|; H3 volumes are raw.  The
    radius band sits on the side where the area at the band is no larger
    than A(vol): below vol up to the S3 hemisphere, above it past."""
    slack = slack or SlackConfig()
    be = get_backend(slack.precision_bits)
    if space is SpaceTag.S3:
        if Fraction(vol) <= Fraction(1, 2):
            # under-band below an exact-value-or-lower float keeps the
            # certified volume below vol on the increasing side
            t = BandTarget(float_at_or_below(vol), eps, "under")
        else:
            t = BandTarget(float_at_or_above(vol), eps, "over")
        r = radius_from_volume(SpaceTag.S3, t, slack=slack)
        area = be.s3_sphere_area(r)
    elif space is SpaceTag.H3:
        k = curvature_from_volume(
            BandTarget(float_at_or_below(vol), eps, "under"), slack=slack)
        area = be.h3_sphere_area_k(k)
    else:
        raise DomainError("single_area_lower supports S3 and H3 only")
    return pad_lower(area, slack.delta)


def g_lower_rect(space: SpaceTag, r: Rect, eps_v: float, eps_w: float, *,
                 slack: SlackConfig | None = None) -> float:
    """Certified lower bound of g = 2A(v/2) + A(w) + A(v+w) over the rect.

    The first two terms are monotone on the verified domains, so the lower-
    left corner bounds them; A(v+w) in S3 is non-monotone across the
    hemisphere, so the minimum of the under-approximations at the two
    diagonal corners is taken (valid by concavity of A in the volume)."""
    slack = slack or SlackConfig()
    t_half = single_area_lower(space, Fraction(r.v_lo) / 2, eps_v / 2.0,
                               slack=slack)
    t_w = single_area_lower(space, r.w_lo, eps_w, slack=slack)
    s_lo = Fraction(r.v_lo) + Fraction(r.w_lo)
    if space is SpaceTag.H3:
        t_sum = single_area_lower(space, s_lo, eps_v, slack=slack)
    else:
        s_hi = Fraction(r.v_hi) + Fraction(r.w_hi)
        t_sum = min(single_area_lower(space, s_lo, eps_v, slack=slack),
                    single_area_lower(space, s_hi, eps_v, slack=slack))
    return 2 * t_half + t_w + t_sum


def g_lower_point(space: SpaceTag, v, w, eps_v: float, eps_w: float, *,
                  slack: SlackConfig | None = None) -> float:
    """Corner version of the concave-part bound: the certified
    under-approximation of g at one point (used per vertex by the S3
    recursion, whose hit rule takes the minimum over the corners)."""
    slack = slack or SlackConfig()
    v, w = float(v), float(w)
    return (2 * single_area_lower(space, v / 2.0, eps_v / 2.0, slack=slack)
            + single_area_lower(space, w, eps_w, slack=slack)
            + single_area_lower(space, v + w, eps_v, slack=slack))


# ---------------------------------------------------------------------------
# certified double-bubble area upper bounds
# ---------------------------------------------------------------------------

def _h_upper_s3_point(v, w, eps: float, slack: SlackConfig) -> float:
    """Upper bound of 2 A(v, w) at one S3 normalized volume pair, with the
    diagonal, w = u line and all-equal dispatches of the original runs."""
    be = get_backend(slack.precision_bits)
    a, b = sorted((Fraction(v), Fraction(w)))
    if not (0 < a and a + b < 1):
        raise DomainError("volume pair outside the S3 simplex")
    ubar = 1 - a - b
    if a == b == ubar:
        ctx = get_context(slack.precision_bits)
        six_pi = ctx.mul(6, ctx.pi())
        return 2 * pad_upper(six_pi, 3 * slack.delta)
    if a == b:
        rr = radii_equal_volumes_s3(a, eps, "v_eq_w", slack=slack)
        area = be.s3_equal_area(rr.r1)
    elif b == ubar:
        rr = radii_equal_volumes_s3(b, eps, "w_eq_u", slack=slack)
        area = be.s3_equal_area(rr.r1)
    else:
        if not (a < b and a + 2 * b < 1):
            raise RegionViolation(
                f"({float(a)}, {float(b)}) outside the increasing region")
        rr = radii_for_sdb_s3(a, b, eps, eps, slack=slack)
        d = be.s3_sdb(rr.r1, rr.r2)
        area = d["area"]
    return 2 * pad_upper(area, 3 * slack.delta)


def h_upper_rect(space: SpaceTag, r: Rect, eps_v: float, eps_w: float, *,
                 slack: SlackConfig | None = None) -> float:
    """Certified upper bound of h = 2A(v, w) over the rect.

    h is increasing in each variable on the valid regions, so the upper-right
    corner dominates; its area is over-approximated through radii whose
    certified volumes exceed the corner."""
    slack = slack or SlackConfig()
    if space is SpaceTag.H3:
        be = get_backend(slack.precision_bits)
        a, b = sorted((float(r.v_hi), float(r.w_hi)))
        k1, k2 = curvatures_for_sdb_h3(a, b, eps_v, eps_w, slack=slack)
        d = be.h3_sdb(max(k1, k2), min(k1, k2))
        return 2 * pad_upper(d["area"], 3 * slack.delta)
    if space is SpaceTag.S3:
        return _h_upper_s3_point(r.v_hi, r.w_hi, max(eps_v, eps_w),
                                 slack=slack)
    raise DomainError("h_upper_rect supports S3 and H3 only")


def h_upper_s3_corner(v: Fraction, w: Fraction, eps: float, *,
                      slack: SlackConfig | None = None) -> float:
    """Upper bound of 2 A(v, w) at an exact S3 corner (fractions of |S3|)."""
    return _h_upper_s3_point(v, w, eps, slack or SlackConfig())


# ---------------------------------------------------------------------------
# shared single-area table for banded sweeps
# ---------------------------------------------------------------------------

class SweepAreaTable:
    """Lazy certified lower bounds A_low(start + i*step) with band width
    `step`, the precomputed array of the banded sweep (memoized on demand so
    ray-restricted sweeps only solve the entries they touch)."""

    def __init__(self, start: Fraction, step: Fraction, *,
                 slack: SlackConfig | None = None):
        self.start = Fraction(start)
        self.step = Fraction(step)
        self.slack = slack or SlackConfig()
        self._cache: dict[int, float] = {}

    def volume(self, i: int) -> Fraction:
        return self.start + i * self.step

    def __getitem__(self, i: int) -> float:
        try:
            return self._cache[i]
        except KeyError:
            vol = self.volume(i)
            val = single_area_lower(SpaceTag.H3, float(vol),
                                    float(self.step), slack=self.slack)
            self._cache[i] = val
            return val

    def index_at_or_below(self, vol: Fraction) -> int:
        """Largest i with grid volume <= vol (grid arithmetic is exact)."""
        i = (Fraction(vol) - self.start) / self.step
        return math.floor(i)
