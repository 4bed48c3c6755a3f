"""Closed-form area/volume/curvature kernels for S3, H3 and flat space.

All rigorous outputs are enclosures; `mean_curvature`, the disk-form cap
volume and `flat_sphere_area` are plain reals per their contracts.  A
midpoint fast path for plotting lives in `fastmath`, not here.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .backend import get_backend
from .enclosure import DEFAULT_PRECISION, Enclosure
from .errors import DomainError

_PI = math.pi


class SpaceTag(enum.Enum):
    S3 = "s3"
    H3 = "h3"
    R3 = "r3"


S3_TOTAL_VOLUME = 2 * _PI ** 2  # |S^3| for curvature 1


@dataclass(frozen=True)
class CapSpec:
    """A spherical cap: supporting-sphere geodesic radius r and half-angle
    phi0 subtending the cap from its own pole (phi0 = 0 empty, pi full)."""

    r: float
    phi0: float

    def __post_init__(self):
        if not self.r > 0:
            raise DomainError("cap radius must be positive")
        if not 0 <= self.phi0 <= _PI:
            raise DomainError("cap half-angle must lie in [0, pi]")


@dataclass(frozen=True)
class DiskCapSpec:
    """H3 cap described by its bounding-disk radius y and the angle theta
    between cap and disk."""

    y: float
    theta: float

    def __post_init__(self):
        if not self.y > 0:
            raise DomainError("disk radius must be positive")
        if not 0 <= self.theta < _PI:
            raise DomainError("theta must lie in [0, pi)")


def _check_radius(space: SpaceTag, r: float):
    if not r > 0:
        raise DomainError("radius must be positive")
    if space is SpaceTag.S3 and r > _PI:
        raise DomainError("S3 radius must not exceed pi")


def sphere_area(space: SpaceTag, r, *, precision_bits: int = DEFAULT_PRECISION) -> Enclosure:
    """Area of a geodesic sphere: 4 pi sin^2 r (S3), 4 pi sinh^2 r (H3)."""
    _check_radius(space, float(r))
    be = get_backend(precision_bits)
    if space is SpaceTag.S3:
        return be.s3_sphere_area(r)
    if space is SpaceTag.H3:
        return be.h3_sphere_area_r(r)
    raise DomainError("sphere_area supports S3 and H3 only")


def sphere_volume(space: SpaceTag, r, *, precision_bits: int = DEFAULT_PRECISION) -> Enclosure:
    """Ball volume: pi(2r - sin 2r) (S3), pi(sinh 2r - 2r) (H3)."""
    _check_radius(space, float(r))
    be = get_backend(precision_bits)
    if space is SpaceTag.S3:
        return be.s3_sphere_volume(r)
    if space is SpaceTag.H3:
        return be.h3_sphere_volume_r(r)
    raise DomainError("sphere_volume supports S3 and H3 only")


def mean_curvature(space: SpaceTag, r: float) -> float:
    """dA/dV of a sphere of radius r: 2 cot r (S3), 2 coth r (H3)."""
    if not r > 0:
        raise DomainError("radius must be positive")
    if space is SpaceTag.S3:
        if r >= _PI:
            raise DomainError("S3 curvature undefined at r >= pi")
        return 2.0 / math.tan(r)
    if space is SpaceTag.H3:
        return 2.0 / math.tanh(r)
    raise DomainError("mean_curvature supports S3 and H3 only")


def cap_area(space: SpaceTag, cap: CapSpec, *, precision_bits: int = DEFAULT_PRECISION) -> Enclosure:
    _check_radius(space, cap.r)
    be = get_backend(precision_bits)
    if space is SpaceTag.S3:
        return be.s3_cap_area(cap.r, cap.phi0)
    if space is SpaceTag.H3:
        return be.h3_cap_area(cap.r, cap.phi0)
    raise DomainError("cap_area supports S3 and H3 only")


def cap_volume(space: SpaceTag, cap: CapSpec, *, precision_bits: int = DEFAULT_PRECISION) -> Enclosure:
    """Signed volume between the cap and the disk spanning its boundary
    circle, positive toward the cap's pole.

    In S3 the value for r > pi/2 is the continuous-in-r extension of the
    closed form (principal branch with a pi^2 shift), which matches direct
    quadrature; phi0 = pi always returns the full ball volume."""
    _check_radius(space, cap.r)
    be = get_backend(precision_bits)
    if space is SpaceTag.S3:
        return be.s3_cap_volume(cap.r, cap.phi0)
    if space is SpaceTag.H3:
        return be.h3_cap_volume(cap.r, cap.phi0)
    raise DomainError("cap_volume supports S3 and H3 only")


def cap_volume_diskform(d: DiskCapSpec) -> float:
    """H3 cap volume in the (y, theta) chart:
    pi ( sinh y sin th / (sech y + cos th) - atanh(sinh y sin th / (cosh y + cos th)) ).
    """
    sy, cy = math.sinh(d.y), math.cosh(d.y)
    st, ct = math.sin(d.theta), math.cos(d.theta)
    if cy + ct <= 0:
        raise DomainError("cosh y + cos theta must be positive")
    return _PI * (sy * st / (1.0 / cy + ct) - math.atanh(sy * st / (cy + ct)))


def flat_sphere_area(v: float) -> float:
    """Euclidean sphere area for enclosed volume v: (36 pi)^(1/3) v^(2/3)."""
    if v < 0:
        raise DomainError("volume must be nonnegative")
    return (36.0 * _PI) ** (1.0 / 3.0) * v ** (2.0 / 3.0)
