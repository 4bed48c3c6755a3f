"""Standard double bubbles in S3, parameterized by the two outer-cap radii.

The generating-curve relations are carried in the cotangent chart (finite
across r = pi/2); the valid two-parameter chart is r1 <= r2 <= pi/2 after
canonical ordering, with the equal-radius family extending over all of
(0, pi) through its own closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .backend import get_backend
from .enclosure import DEFAULT_PRECISION, Enclosure
from .errors import DegenerateConfig
from .solvers import SdbRadiiS3

__all__ = ["SdbRadiiS3", "GeneratingAngles", "generating_angles",
           "sdb_volumes_s3", "sdb_area_s3", "equal_volume_s3",
           "tangent_angles_at_interface"]

_PI = math.pi


@dataclass(frozen=True)
class GeneratingAngles:
    """Generating-curve data: separating-cap inclination theta, interface
    circle extrinsic radius x, separating sphere radius r3, the cap angles
    phi1..phi3 at their centers, and the branch-adjusted psi1_hat."""

    theta: float
    x: float
    r3: float
    phi1: float
    psi1_hat: float
    phi2: float
    phi3: float


def generating_angles(rad: SdbRadiiS3, *,
                      precision_bits: int = DEFAULT_PRECISION) -> GeneratingAngles:
    """Midpoint values of the seven generating quantities (the certified
    volume/area paths re-derive them internally in interval form)."""
    r1, r2 = rad.r1, rad.r2
    if r1 > r2:
        raise DegenerateConfig("generating_angles expects r1 <= r2")
    be = get_backend(precision_bits)
    g = be.s3_generating(r1, r2)
    return GeneratingAngles(
        theta=g["theta"].mid, x=g["x"].mid, r3=g["r3"].mid,
        phi1=g["phi1"].mid, psi1_hat=g["psi1"].mid,
        phi2=g["phi2"].mid, phi3=g["phi3"].mid)


def sdb_volumes_s3(rad: SdbRadiiS3, *,
                   precision_bits: int = DEFAULT_PRECISION) -> tuple[Enclosure, Enclosure]:
    """Enclosures of the two region volumes (smaller-cap region first when
    r1 <= r2; labels swap with the radii)."""
    be = get_backend(precision_bits)
    if rad.r1 <= rad.r2:
        d = be.s3_sdb(rad.r1, rad.r2)
        return d["v"], d["w"]
    d = be.s3_sdb(rad.r2, rad.r1)
    return d["w"], d["v"]


def sdb_area_s3(rad: SdbRadiiS3, *,
                precision_bits: int = DEFAULT_PRECISION) -> Enclosure:
    """Enclosure of the total area of the three caps."""
    be = get_backend(precision_bits)
    a, b = sorted((rad.r1, rad.r2))
    return be.s3_sdb(a, b)["area"]


def equal_volume_s3(r: float, *,
                    precision_bits: int = DEFAULT_PRECISION) -> Enclosure:
    """Region volume of the equal-volume bubble with outer-cap radius r."""
    if not 0 < r < _PI:
        raise DegenerateConfig("equal-volume radius must lie in (0, pi)")
    return get_backend(precision_bits).s3_equal_volume(r)


def exterior_volume_s3(rad: SdbRadiiS3, *,
                       precision_bits: int = DEFAULT_PRECISION) -> Enclosure:
    """Exterior volume assembled from the complement caps (conservation
    oracle: v + w + exterior = 2 pi^2)."""
    be = get_backend(precision_bits)
    a, b = sorted((rad.r1, rad.r2))
    return be.s3_exterior_from_complements(a, b)


def tangent_angles_at_interface(rad: SdbRadiiS3) -> list[float]:
    """Pairwise angles (radians) between the three generating arcs at the
    interface circle, reconstructed from the cross-section embedding; a
    valid configuration returns three values of 2 pi / 3."""
    r1, r2 = sorted((rad.r1, rad.r2))
    g = generating_angles(SdbRadiiS3(r1, r2))
    x = g.x
    px, pz = math.cos(x), math.sin(x)
    tangents = []
    for (r, half_angle, direction) in ((r1, g.psi1_hat, -1.0),
                                       (r2, _PI - g.phi2, 1.0),
                                       (g.r3, g.phi3, 1.0)):
        sigma = math.atan2(-direction * math.sin(r) * math.cos(half_angle),
                           math.cos(r))
        cs, ss = math.cos(sigma), math.sin(sigma)
        t = half_angle
        # d/dt of the arc point in the cross-section embedding
        dpx = -math.sin(r) * math.sin(t) * direction * (-ss)
        dpy = -math.sin(r) * math.sin(t) * direction * cs
        dpz = math.sin(r) * math.cos(t)
        n = math.hypot(math.hypot(dpx, dpy), dpz)
        tangents.append((dpx / n, dpy / n, dpz / n))
    out = []
    for i in range(3):
        for j in range(i + 1, 3):
            d = sum(a * b for a, b in zip(tangents[i], tangents[j]))
            out.append(math.acos(max(-1.0, min(1.0, d))))
    return out
