"""Certified solver postconditions: band membership verified through the
forward maps, determinism, and the curvature-pair stepper contract."""

import math
import random
from fractions import Fraction

import pytest

from bubbleproof import fastmath as fm
from bubbleproof.backend import get_backend
from bubbleproof.enclosure import SlackConfig
from bubbleproof.errors import (CurvatureUnderflow, InfeasibleBand,
                                InfeasibleTarget, RegionViolation, StepFailure)
from bubbleproof.geometry import SpaceTag
from bubbleproof.solvers import (BandTarget, StepperState, StepWindow,
                                 curvature_from_volume, curvature_pair_step,
                                 curvatures_for_sdb_h3, radii_equal_volumes_s3,
                                 radii_for_sdb_s3, radius_from_volume)

PI = math.pi
SLACK = SlackConfig()
DELTA = SLACK.delta


def test_volume_monotone_in_radius():
    """Bisection correctness rests on monotone volume maps; probe 1e4
    ordered pairs per space."""
    rnd = random.Random(1)
    for _ in range(10000):
        a = rnd.uniform(1e-3, PI - 2e-3)
        b = rnd.uniform(a + 1e-9, PI - 1e-3)
        assert fm.s3_ball_volume(a) < fm.s3_ball_volume(b)
    for _ in range(10000):
        a = rnd.uniform(1e-3, 8.0)
        b = rnd.uniform(a + 1e-9, 8.1)
        assert fm.h3_ball_volume(a) < fm.h3_ball_volume(b)


def test_radius_band_s3_under():
    be = get_backend(53)
    t = BandTarget(0.5, 1e-6, "under")  # normalized hemisphere volume
    r = radius_from_volume(SpaceTag.S3, t, slack=SLACK)
    assert abs(r - PI / 2) < 1e-4
    enc = be.s3_sphere_volume(r)
    frac = float(enc.hi) / (2 * PI ** 2)
    assert 0.5 - 1e-6 < float(enc.lo) / (2 * PI ** 2) and frac < 0.5 - DELTA / 2


def test_radius_band_s3_over_past_half():
    r = radius_from_volume(SpaceTag.S3, BandTarget(0.95, 1e-6, "over"),
                           slack=SLACK)
    assert r > PI / 2
    be = get_backend(53)
    frac = float(be.s3_sphere_volume(r).lo) / (2 * PI ** 2)
    assert frac > 0.95


def test_h3_curvature_band_strict_margin():
    be = get_backend(53)
    for v in (0.00274, 0.1, 5.0, 200.0):
        k = curvature_from_volume(BandTarget(v, 1e-5 * max(1, v), "under"),
                                  slack=SLACK)
        enc = be.h3_sphere_volume_k(k)
        assert float(enc.hi) < v - DELTA * 0.99
        assert float(enc.lo) > v - 1e-5 * max(1, v) - 1e-12


def test_infeasible_band():
    with pytest.raises(InfeasibleBand):
        radius_from_volume(SpaceTag.S3, BandTarget(0.5, 1e-9, "under"),
                           slack=SLACK)


def test_radii_for_sdb_bands_and_region():
    be = get_backend(53)
    v, w = Fraction(3, 20), Fraction(1, 4)
    rad, (av, aw) = radii_for_sdb_s3(v, w, 1e-5, 1e-5, slack=SLACK,
                                     return_bands=True)
    d = be.s3_sdb(rad.r1, rad.r2)
    total = 2 * PI ** 2
    assert float(d["v"].lo) / total > float(v) + DELTA * 0.99
    assert float(d["v"].hi) / total < float(v) + av
    assert float(d["w"].lo) / total > float(w) + DELTA * 0.99
    assert float(d["w"].hi) / total < float(w) + aw
    # the over-approximated pair must stay inside the increasing region
    assert float(v) + av <= float(w) + aw
    assert float(v) + av + 2 * (float(w) + aw) <= 1


def test_radii_shrink_guard():
    # near the w = u line the given bands must shrink strictly
    v, w = Fraction(1, 5), Fraction(2, 5) - Fraction(1, 10 ** 5)
    rad, (av, aw) = radii_for_sdb_s3(v, w, 1e-4, 1e-4, slack=SLACK,
                                     return_bands=True)
    assert aw < 1e-4


def test_radii_region_violation():
    with pytest.raises(RegionViolation):
        radii_for_sdb_s3(Fraction(1, 4), Fraction(3, 20), 1e-6, 1e-6,
                         slack=SLACK)
    with pytest.raises(RegionViolation):
        radii_for_sdb_s3(Fraction(1, 5), Fraction(2, 5), 1e-6, 1e-6,
                         slack=SLACK)  # v + 2w = |S3|


def test_equal_volume_modes():
    be = get_backend(53)
    total = 2 * PI ** 2
    tgt = Fraction(1, 3) - Fraction(1, 10 ** 6)
    rr = radii_equal_volumes_s3(tgt, 1e-5, "v_eq_w", slack=SLACK)
    assert abs(rr.r1 - PI / 2) < 1e-2
    enc = be.s3_equal_volume(rr.r1)
    assert float(tgt) + DELTA * 0.99 < float(enc.lo) / total
    assert float(enc.hi) / total < float(tgt) + 1e-5

    rr = radii_equal_volumes_s3(Fraction(2, 5), 1e-5, "w_eq_u", slack=SLACK)
    assert rr.r1 > PI / 2
    enc = be.s3_equal_volume(rr.r1)
    assert float(enc.hi) / total < 0.4 - DELTA * 0.99
    with pytest.raises(InfeasibleTarget):
        radii_equal_volumes_s3(Fraction(3, 10), 1e-5, "w_eq_u", slack=SLACK)
    with pytest.raises(InfeasibleTarget):
        radii_equal_volumes_s3(Fraction(1, 3), 1e-5, "v_eq_w", slack=SLACK)


def test_curvature_pair_bands():
    be = get_backend(53)
    k1, k2 = curvatures_for_sdb_h3(0.85, 1.0, 0.0025, 0.0025, slack=SLACK)
    d = be.h3_sdb(max(k1, k2), min(k1, k2))
    assert float(d["v"].lo) > 0.85 + 2 * DELTA * 0.99
    assert float(d["v"].hi) < 0.85 + 0.0025
    assert float(d["w"].lo) > 1.0 + 2 * DELTA * 0.99
    assert float(d["w"].hi) < 1.0 + 0.0025


def test_solvers_deterministic():
    a = radii_for_sdb_s3(Fraction(3, 20), Fraction(1, 4), 1e-5, 1e-5,
                         slack=SLACK)
    b = radii_for_sdb_s3(Fraction(3, 20), Fraction(1, 4), 1e-5, 1e-5,
                         slack=SLACK)
    assert a == b
    s1 = curvature_pair_step(StepperState(1.849, 1.787), 0.85, 1.0,
                             0.005, 0.005, slack=SLACK)
    s2 = curvature_pair_step(StepperState(1.849, 1.787), 0.85, 1.0,
                             0.005, 0.005, slack=SLACK)
    assert s1 == s2


def test_stepper_stationary_noop():
    st = curvature_pair_step(StepperState(1.849, 1.787), 0.85, 1.0,
                             0.005, 0.005, slack=SLACK)
    again = curvature_pair_step(st, 0.85, 1.0, 0.005, 0.005, slack=SLACK)
    assert again == st  # volumes already certified inside the window


def test_stepper_one_box_move():
    # one horizontal box at the parameters of the 0.85..15 band claim
    st = curvature_pair_step(StepperState(1.849, 1.787), 0.85, 1.0,
                             0.005, 0.005, slack=SLACK)
    st2 = curvature_pair_step(st, 0.855, 1.0, 0.005, 0.005, slack=SLACK)
    v, w = fm.h3_sdb_volumes(st2.k1, st2.k2)
    assert 0.855 + 0.0025 + DELTA < v < 0.855 + 0.01
    assert 1.0 + 0.0025 + DELTA < w < 1.0 + 0.01
    assert st2.k1 < st.k1  # volume grew, curvature dropped


def test_stepper_forced_failure():
    with pytest.raises((StepFailure, CurvatureUnderflow)):
        curvature_pair_step(StepperState(1.849, 1.787), 5000.0, 9000.0,
                            0.005, 0.005, slack=SLACK)


def test_stepper_window_is_inside_doubled_box():
    w = StepWindow()
    assert w.lo_frac >= 0.0 and w.hi_frac <= 2.0
