"""Certified inverse solvers.

Every solver steps with fast midpoint arithmetic but re-verifies its
postcondition through enclosure endpoints before returning (self-checking):
a returned radius/curvature always carries a certified volume band.
Deterministic by construction; iteration budgets replace the open-ended
while-loops of the original runs with bracketed bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

from . import fastmath as fm
from .backend import get_backend
from .enclosure import SlackConfig, get_context
from .errors import (CurvatureUnderflow, InfeasibleBand,
                     InfeasibleTarget, NoConvergence, RegionViolation,
                     StepFailure)
from .geometry import SpaceTag

BISECT_BUDGET = 200
SECANT_BUDGET = 64

# S3 volume coordinates are normalized to |S3| = 1 throughout the solver and
# engine layers (the w = u and v = w dispatches then compare exactly); H3
# volumes stay in raw units.


def _s3_norm(slack: SlackConfig):
    """Map enclosures of raw S3 volumes to fractions of |S3|."""
    ctx = get_context(slack.precision_bits)
    total = ctx.mul(2, ctx.sqr(ctx.pi()))

    def norm(enc):
        return ctx.div(enc, total)

    return norm


@dataclass(frozen=True)
class BandTarget:
    """One-sided volume band around a target volume.

    side == "under": the solved volume must lie in [v - eps, v - delta];
    side == "over":  in [v + delta, v + eps].
    """

    v: float
    eps: float
    side: str = "under"

    def __post_init__(self):
        if self.side not in ("under", "over"):
            raise ValueError("side must be 'under' or 'over'")

    def bounds(self, delta: float):
        if self.eps <= delta:
            raise InfeasibleBand(f"band width {self.eps} <= delta {delta}")
        if self.side == "under":
            return self.v - self.eps, self.v - delta
        return self.v + delta, self.v + self.eps


def _bisect_into_band(value_enc, lo_param, hi_param, band_lo, band_hi,
                      increasing=True, budget=BISECT_BUDGET):
    """Bisect a monotone map until its enclosure lands inside [band_lo,
    band_hi]; value_enc(param) -> Enclosure."""
    target = 0.5 * (band_lo + band_hi)
    a, b = lo_param, hi_param
    for _ in range(budget):
        mid = 0.5 * (a + b)
        enc = value_enc(mid)
        if enc.lo > band_lo and enc.hi < band_hi:
            return mid
        if (enc.mid < target) == increasing:
            a = mid
        else:
            b = mid
    raise NoConvergence("bisection failed to land inside the band")


def radius_from_volume(space: SpaceTag, t: BandTarget, *,
                       slack: SlackConfig | None = None) -> float:
    """Radius whose ball volume is certified inside the band.

    S3 targets are normalized volume fractions in (0, 1); H3 targets are raw
    volumes."""
    slack = slack or SlackConfig()
    be = get_backend(slack.precision_bits)
    lo, hi = t.bounds(slack.delta)
    if space is SpaceTag.S3:
        if not 0 < t.v < 1:
            raise InfeasibleTarget("normalized S3 volume outside (0, 1)")
        norm = _s3_norm(slack)
        return _bisect_into_band(lambda r: norm(be.s3_sphere_volume(r)),
                                 0.0, math.pi, lo, hi)
    if space is SpaceTag.H3:
        if not t.v > 0:
            raise InfeasibleTarget("H3 volume must be positive")
        upper = 1.0
        while fm.h3_ball_volume(upper) < hi:
            upper *= 2
        return _bisect_into_band(be.h3_sphere_volume_r, 0.0, upper, lo, hi)
    raise InfeasibleTarget("radius_from_volume supports S3 and H3 only")


def curvature_from_volume(t: BandTarget, *,
                          slack: SlackConfig | None = None) -> float:
    """H3 curvature parameter k = coth r with ball volume inside the band."""
    slack = slack or SlackConfig()
    be = get_backend(slack.precision_bits)
    lo, hi = t.bounds(slack.delta)
    if not lo > 0:
        raise InfeasibleTarget("band extends to non-positive volumes")
    k_hi = 2.0  # volume decreases in k
    while fm.h3_ball_volume_k(k_hi) > lo:
        k_hi = 1 + 2 * (k_hi - 1)
    k_lo = 1 + 1e-8
    while fm.h3_ball_volume_k(k_lo) < hi:
        k_lo = 1 + 0.5 * (k_lo - 1)
        if k_lo - 1 < 1e-300:
            raise NoConvergence("curvature bracket underflow")
    return _bisect_into_band(be.h3_sphere_volume_k, k_lo, k_hi, lo, hi,
                             increasing=False)


# ---------------------------------------------------------------------------
# S3 double-bubble inverses
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SdbRadiiS3:
    """Outer-cap radii of an S3 standard double bubble (r1 for the smaller
    region)."""

    r1: float
    r2: float


def radii_equal_volumes_s3(target, eps: float, mode: str, *,
                           slack: SlackConfig | None = None) -> SdbRadiiS3:
    """Equal-radius solves used on the diagonal v = w and on the w = u line;
    `target` is a normalized volume fraction (Fraction or float).

    mode == "v_eq_w": region volume certified in [target + delta, target + eps]
    (an over-band, giving an area overestimate on the diagonal).
    mode == "w_eq_u": region volume certified in [target - eps, target - delta]
    (an under-band; by relabeling, the area overestimates the w = u point).
    """
    slack = slack or SlackConfig()
    be = get_backend(slack.precision_bits)
    norm = _s3_norm(slack)
    tgt = float(target)
    if mode == "v_eq_w":
        if not 3 * Fraction(target) < 1:
            raise InfeasibleTarget("equal volume beyond |S3|/3")
        adj = eps
        while 3 * (tgt + adj) > 1:
            adj /= 2
            if adj <= slack.delta:
                raise InfeasibleBand("shrunk band fell below delta")
        band = BandTarget(tgt, adj, "over")
    elif mode == "w_eq_u":
        if 3 * Fraction(target) < 1:
            raise InfeasibleTarget("W is too small for the w = u line")
        adj = eps
        while 3 * (tgt - adj) < 1:
            adj /= 2
            if adj <= slack.delta:
                raise InfeasibleBand("shrunk band fell below delta")
        band = BandTarget(tgt, adj, "under")
    else:
        raise ValueError("mode must be 'v_eq_w' or 'w_eq_u'")
    lo, hi = band.bounds(slack.delta)
    r = _bisect_into_band(lambda x: norm(be.s3_equal_volume(x)),
                          1e-9, math.pi - 1e-9, lo, hi)
    return SdbRadiiS3(r, r)


def radii_for_sdb_s3(v, w, eps_v: float, eps_w: float, *,
                     slack: SlackConfig | None = None,
                     return_bands: bool = False):
    """Radii whose region volumes are certified in [v + delta, v + eps'] x
    [w + delta, w + eps'], with the bands shrunk so the over-approximated
    pair stays strictly inside the increasing region v < w, v + 2w < |S3|.
    Volumes are normalized fractions (Fraction coordinates compare exactly
    against the region boundary)."""
    slack = slack or SlackConfig()
    be = get_backend(slack.precision_bits)
    if not (0 < Fraction(v) < Fraction(w)
            and Fraction(v) + 2 * Fraction(w) < 1):
        raise RegionViolation(f"({v}, {w}) not inside the increasing region")
    norm = _s3_norm(slack)
    v, w = float(v), float(w)
    a_v, a_w = eps_v, eps_w
    for _ in range(200):
        changed = False
        if v + a_v + 2 * (w + a_w) > 1 and v + a_v > 1 - 2 * w:
            a_v /= 2
            changed = True
        if 2 * (w + a_w) > 1 - (v + a_v):
            a_w /= 2
            a_v /= math.sqrt(2)
            changed = True
        if v + a_v > w + a_w:
            a_v /= 2
            changed = True
        if not changed:
            break
        if min(a_v, a_w) <= slack.delta:
            raise InfeasibleBand("error shrink guard fell below delta")
    lo1, hi1 = v + slack.delta, v + a_v
    lo2, hi2 = w + slack.delta, w + a_w

    r1, r2 = fm.s3_solve_pair(0.5 * (lo1 + hi1) * fm.VOL_S3,
                              0.5 * (lo2 + hi2) * fm.VOL_S3)

    def enc_pair(r1, r2):
        d = be.s3_sdb(r1, r2)
        return norm(d["v"]), norm(d["w"])

    for _ in range(SECANT_BUDGET):
        e1, e2 = enc_pair(r1, r2)
        ok1 = e1.lo > lo1 and e1.hi < hi1
        ok2 = e2.lo > lo2 and e2.hi < hi2
        if ok1 and ok2:
            out = SdbRadiiS3(r1, r2)
            return (out, (a_v, a_w)) if return_bands else out
        if not ok1:
            # volume of region 1 increases with r1 at fixed r2
            step = max(1e-12, 0.25 * (hi1 - lo1) * fm.VOL_S3
                       / max(fm.s3_sphere_area(r1), 1e-9))
            a, b = r1 - 64 * step, r1 + 64 * step
            b = min(b, r2 * (1 - 1e-14))
            r1 = _bisect_into_band(lambda x: enc_pair(x, r2)[0], a, b,
                                   lo1, hi1, budget=80)
        if not ok2:
            step = max(1e-12, 0.25 * (hi2 - lo2) * fm.VOL_S3
                       / max(fm.s3_sphere_area(r2), 1e-9))
            a, b = r2 - 64 * step, min(r2 + 64 * step, math.pi / 2)
            r2 = _bisect_into_band(lambda x: enc_pair(r1, x)[1], a, b,
                                   lo2, hi2, budget=80)
    raise NoConvergence(f"radii_for_sdb_s3 at ({v}, {w})")


# ---------------------------------------------------------------------------
# H3 double-bubble inverses
# ---------------------------------------------------------------------------

def curvatures_for_sdb_h3(v: float, w: float, eps_v: float, eps_w: float, *,
                          slack: SlackConfig | None = None,
                          margin_factor: float = 2.0):
    """Curvature pair whose region volumes are certified in
    [v + margin_factor*delta, v + eps_v] x [w + margin_factor*delta, w + eps_w].

    The doubled delta margin follows the two-summand error rule of the
    original runs."""
    slack = slack or SlackConfig()
    be = get_backend(slack.precision_bits)
    dd = margin_factor * slack.delta
    lo1, hi1 = v + dd, v + eps_v
    lo2, hi2 = w + dd, w + eps_w
    if not (hi1 > lo1 and hi2 > lo2):
        raise InfeasibleBand("band width below the doubled delta margin")
    k1, k2 = fm.h3_solve_pair(0.5 * (lo1 + hi1), 0.5 * (lo2 + hi2))

    def enc_pair(k1, k2):
        d = be.h3_sdb(max(k1, k2), min(k1, k2))
        return d["v"], d["w"]

    for _ in range(SECANT_BUDGET):
        e1, e2 = enc_pair(k1, k2)
        ok1 = e1.lo > lo1 and e1.hi < hi1
        ok2 = e2.lo > lo2 and e2.hi < hi2
        if ok1 and ok2:
            return k1, k2
        # region volumes decrease in the own-cap curvature
        if not ok1:
            spread = max(1e-13, (k1 - 1) * 1e-4)
            k1 = _bisect_into_band(lambda x: enc_pair(x, k2)[0],
                                   k1 - 64 * spread, k1 + 64 * spread,
                                   lo1, hi1, increasing=False, budget=80)
        if not ok2:
            spread = max(1e-13, (k2 - 1) * 1e-4)
            k2 = _bisect_into_band(lambda x: enc_pair(k1, x)[1],
                                   k2 - 64 * spread, k2 + 64 * spread,
                                   lo2, hi2, increasing=False, budget=80)
    raise NoConvergence(f"curvatures_for_sdb_h3 at ({v}, {w})")


@dataclass(frozen=True)
class StepperState:
    """Curvature pair plus the multiplicative probe factors carried between
    sweep steps (defaults .9999 / .9995)."""

    k1: float
    k2: float
    scale1: float = 0.9999
    scale2: float = 0.9995

    def __post_init__(self):
        if self.k1 <= 1 or self.k2 <= 1:
            raise CurvatureUnderflow("curvature parameters must exceed 1")


@dataclass(frozen=True)
class StepWindow:
    """Acceptance window for the stepper, as fractions of a box size:
    volumes must land in (v + lo_frac*box + delta, v + hi_frac*box).

    The sweep default (0.5, 2.0) sits strictly inside the doubled box used
    by the original runs and additionally rules out coverage gaps between
    consecutive boxes."""

    lo_frac: float = 0.5
    hi_frac: float = 2.0


def _probe_axis(volume_of, k: float, scale: float, delta_target: float,
                lo_mult: float, hi_mult: float):
    """One-axis probe: move k until the volume increases by
    [lo_mult, hi_mult] * delta_target. Returns (k', achieved volume)."""
    v0 = volume_of(k)
    kp = scale * k
    if kp <= 1:
        raise CurvatureUnderflow("probe curvature fell to 1")
    v1 = volume_of(kp)
    slope = (v1 - v0) / (kp - k)
    if slope != 0:
        kp = kp + (delta_target - (v1 - v0)) / slope
    over, under = k, kp
    for _ in range(24):
        if kp <= 1:
            raise CurvatureUnderflow("probe curvature fell to 1")
        dv = volume_of(kp) - v0
        if lo_mult * delta_target <= dv <= hi_mult * delta_target:
            return kp, v0 + dv
        if dv < lo_mult * delta_target:
            over, kp = kp, 0.5 * (kp + under)
        else:
            under, kp = kp, 0.5 * (kp + over)
    return kp, volume_of(kp)


def curvature_pair_step(state: StepperState, v1: float, v2: float,
                        box_w: float, box_h: float, *,
                        slack: SlackConfig | None = None,
                        window: StepWindow = StepWindow()) -> StepperState:
    """Move the curvature pair so the bubble volumes land (certified) inside
    the acceptance window of the box with lower-left corner (v1, v2).

    Mirrors the one-box-over / one-box-up probes followed by a 2x2 secant
    solve, retried with verified enclosure containment."""
    slack = slack or SlackConfig()
    be = get_backend(slack.precision_bits)

    def vols_mid(k1, k2):
        # oriented: the k1-cap region's volume first, either curvature order
        return fm.h3_sdb_volumes(k1, k2)

    def vols_enc(k1, k2):
        d = be.h3_sdb(max(k1, k2), min(k1, k2))
        return (d["v"], d["w"]) if k1 >= k2 else (d["w"], d["v"])

    lo1 = v1 + window.lo_frac * box_w + slack.delta
    hi1 = v1 + window.hi_frac * box_w
    lo2 = v2 + window.lo_frac * box_h + slack.delta
    hi2 = v2 + window.hi_frac * box_h
    t1, t2 = 0.5 * (lo1 + hi1), 0.5 * (lo2 + hi2)

    k1, k2 = state.k1, state.k2
    V0, W0 = vols_mid(k1, k2)
    if lo1 < V0 < hi1 and lo2 < W0 < hi2:
        e1, e2 = vols_enc(k1, k2)
        if e1.lo > lo1 and e1.hi < hi1 and e2.lo > lo2 and e2.hi < hi2:
            return state

    try:
        k1p, _ = _probe_axis(lambda k: vols_mid(k, k2)[0], k1, state.scale1,
                             box_w, 0.8, 1.7)
        k2p, _ = _probe_axis(lambda k: vols_mid(k1, k)[1], k2, state.scale2,
                             box_h, 1.0, 2.0)
    except CurvatureUnderflow:
        raise
    scale1 = min(max(k1p / k1, 0.5), 0.999999)
    scale2 = min(max(k2p / k2, 0.5), 0.999999)

    for _ in range(SECANT_BUDGET):
        p1v, p1w = vols_mid(k1p, k2)
        p2v, p2w = vols_mid(k1, k2p)
        m11, m12 = p1v - V0, p1w - W0
        m21, m22 = p2v - V0, p2w - W0
        det = m11 * m22 - m12 * m21
        if abs(det) < 1e-300:
            k1n, k2n = k1p, k2p  # degenerate secant: take the axis probes
        else:
            alpha = ((t1 - V0) * m22 - (t2 - W0) * m21) / det
            beta = ((t2 - W0) * m11 - (t1 - V0) * m12) / det
            k1n = k1 + alpha * (k1p - k1)
            k2n = k2 + beta * (k2p - k2)
        if k1n <= 1 or k2n <= 1:
            raise CurvatureUnderflow("secant step underflowed curvature")
        Vn, Wn = vols_mid(k1n, k2n)
        if lo1 < Vn < hi1 and lo2 < Wn < hi2:
            e1, e2 = vols_enc(k1n, k2n)
            if e1.lo > lo1 and e1.hi < hi1 and e2.lo > lo2 and e2.hi < hi2:
                return replace(state, k1=k1n, k2=k2n,
                               scale1=scale1, scale2=scale2)
        # refresh the base point and retry with tightened probes
        k1, k2, V0, W0 = k1n, k2n, Vn, Wn
        try:
            k1p, _ = _probe_axis(lambda k: vols_mid(k, k2)[0], k1, scale1,
                                 0.25 * box_w, 0.1, 4.0)
            k2p, _ = _probe_axis(lambda k: vols_mid(k1, k)[1], k2, scale2,
                                 0.25 * box_h, 0.1, 4.0)
        except CurvatureUnderflow:
            raise
    raise StepFailure(
        f"no certified curvature pair for the box at ({v1}, {v2})")
