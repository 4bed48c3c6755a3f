"""Certified bound sandwiching, the ray limit, balancing transfer and the
sweep area table."""

import math
import random
from fractions import Fraction

import oracles as oc
from bubbleproof import fastmath as fm
from bubbleproof.bounds import (Rect, SweepAreaTable, VolumePair,
                                critical_ratio, g_lower_point, g_lower_rect,
                                h_upper_rect, hutchings_point, limit_along_ray,
                                single_area_lower)
from bubbleproof.enclosure import SlackConfig
from bubbleproof.geometry import SpaceTag

PI = math.pi
VOL = 2 * PI ** 2
SLACK = SlackConfig()


def test_critical_ratio_bracket():
    lam = critical_ratio()
    assert 0.84 < lam < 0.85
    assert abs(limit_along_ray(lam)) < 1e-14


def test_limit_along_ray_values():
    assert abs(limit_along_ray(1.0) - 2 * PI * (math.log(8) - 2)) < 1e-12
    assert limit_along_ray(1e-9) < 0
    assert abs(limit_along_ray(1e-9) - 2 * PI * (math.log(4) - 2)) < 1e-6


def test_permutation_identity_s3():
    rnd = random.Random(3)
    for _ in range(100):
        vb = rnd.uniform(0.05, 0.3)
        wb = rnd.uniform(vb, min(0.9 - vb, 0.6))
        ub = 1 - vb - wb
        if ub <= 0.02:
            continue
        f1 = hutchings_point(SpaceTag.S3, VolumePair(vb * VOL, wb * VOL))
        f2 = hutchings_point(SpaceTag.S3, VolumePair(vb * VOL, ub * VOL))
        assert abs(f1 - f2) < 1e-8


def test_h3_equal_volume_positive():
    for w in (0.1, 1.0, 10.0):
        f = hutchings_point(SpaceTag.H3, VolumePair(w, w))
        truth = float(oc.h3_hutchings(w, w))
        assert f > 0 and abs(f - truth) < 1e-7


def test_h3_ray_approaches_zero():
    lam = critical_ratio()
    f = hutchings_point(SpaceTag.H3, VolumePair(lam * 1e4, 1e4))
    assert 0 < f < 0.05


def test_single_area_lower_is_lower(backend_marks=None):
    rnd = random.Random(5)
    for _ in range(25):
        vb = rnd.uniform(0.02, 0.95)
        lower = single_area_lower(SpaceTag.S3, vb, 1e-6, slack=SLACK)
        truth = float(oc.s3_sphere_area(oc.s3_radius_of_volume(vb * oc.VOL_S3)))
        assert lower < truth
        assert truth - lower < 1e-3
    for _ in range(25):
        v = 10 ** rnd.uniform(-3, 2)
        lower = single_area_lower(SpaceTag.H3, v, 1e-6 * max(1, v), slack=SLACK)
        truth = float(oc.h3_sphere_area(oc.h3_radius_of_volume(v)))
        assert lower < truth
        assert truth - lower < 1e-3 * max(1, v)


def _dense_g_inf(space, rect, n=20):
    vals = []
    for i in range(n):
        for j in range(n):
            if space is SpaceTag.S3:
                v = float(rect.v_lo) + (float(rect.v_hi) - float(rect.v_lo)) * i / (n - 1)
                w = float(rect.w_lo) + (float(rect.w_hi) - float(rect.w_lo)) * j / (n - 1)
                g = (2 * fm.s3_single_area_of_volume(v * fm.VOL_S3 / 2)
                     + fm.s3_single_area_of_volume(w * fm.VOL_S3)
                     + fm.s3_single_area_of_volume((v + w) * fm.VOL_S3))
            else:
                v = rect.v_lo + (rect.v_hi - rect.v_lo) * i / (n - 1)
                w = rect.w_lo + (rect.w_hi - rect.w_lo) * j / (n - 1)
                g = (2 * fm.h3_single_area_of_volume(v / 2)
                     + fm.h3_single_area_of_volume(w)
                     + fm.h3_single_area_of_volume(v + w))
            vals.append(g)
    return min(vals)


def _dense_h_sup(space, rect, n=12):
    vals = []
    for i in range(n):
        for j in range(n):
            if space is SpaceTag.S3:
                v = float(rect.v_lo) + (float(rect.v_hi) - float(rect.v_lo)) * i / (n - 1)
                w = float(rect.w_lo) + (float(rect.w_hi) - float(rect.w_lo)) * j / (n - 1)
                a, b = sorted((v, w))
                if a == b:
                    area = fm.s3_equal_area(fm.s3_solve_equal(a * fm.VOL_S3))
                else:
                    r1, r2 = fm.s3_solve_pair(a * fm.VOL_S3, b * fm.VOL_S3)
                    area = fm.s3_sdb_area(r1, r2)
            else:
                v = rect.v_lo + (rect.v_hi - rect.v_lo) * i / (n - 1)
                w = rect.w_lo + (rect.w_hi - rect.w_lo) * j / (n - 1)
                a, b = sorted((v, w))
                k1, k2 = fm.h3_solve_pair(a, b)
                area = fm.h3_sdb_area(k1, k2)
            vals.append(2 * area)
    return max(vals)


def test_sandwich_s3():
    rect = Rect(Fraction(3, 20), Fraction(1, 4), Fraction(4, 25), Fraction(13, 50))
    g_low = g_lower_rect(SpaceTag.S3, rect, 1e-5, 1e-5, slack=SLACK)
    h_up = h_upper_rect(SpaceTag.S3, rect, 1e-5, 1e-5, slack=SLACK)
    assert g_low <= _dense_g_inf(SpaceTag.S3, rect) + 1e-12
    assert h_up >= _dense_h_sup(SpaceTag.S3, rect) - 1e-12


def test_sandwich_h3():
    rect = Rect(0.85, 1.0, 0.86, 1.01)
    g_low = g_lower_rect(SpaceTag.H3, rect, 0.005, 0.005, slack=SLACK)
    h_up = h_upper_rect(SpaceTag.H3, rect, 0.005, 0.005, slack=SLACK)
    assert g_low <= _dense_g_inf(SpaceTag.H3, rect) + 1e-12
    assert h_up >= _dense_h_sup(SpaceTag.H3, rect) - 1e-12


def test_g_lower_two_corner_rule_s3():
    """When the rect straddles the hemisphere in v + w, the sum term takes
    the minimum of the two diagonal corners (non-monotone territory)."""
    rect = Rect(Fraction(22, 100), Fraction(26, 100),
                Fraction(26, 100), Fraction(30, 100))
    # v + w spans [0.48, 0.56] around the hemisphere fraction 0.5
    g_low = g_lower_rect(SpaceTag.S3, rect, 1e-5, 1e-5, slack=SLACK)
    assert g_low <= _dense_g_inf(SpaceTag.S3, rect) + 1e-12
    lo_corner = single_area_lower(SpaceTag.S3, Fraction(48, 100), 1e-5, slack=SLACK)
    hi_corner = single_area_lower(SpaceTag.S3, Fraction(56, 100), 1e-5, slack=SLACK)
    # both corners strictly exceed the straddling bound's third term
    third = g_low - (2 * single_area_lower(SpaceTag.S3, Fraction(11, 100), 1e-5 / 2, slack=SLACK)
                     + single_area_lower(SpaceTag.S3, Fraction(26, 100), 1e-5, slack=SLACK))
    assert third <= min(lo_corner, hi_corner) + 1e-9


def test_shrinking_eps_tightens_g():
    rect = Rect(0.85, 1.0, 0.855, 1.005)
    vals = [g_lower_rect(SpaceTag.H3, rect, e, e, slack=SLACK)
            for e in (4e-3, 1e-3, 2.5e-4)]
    assert vals[0] < vals[1] < vals[2]


def test_h_upper_monotone_in_rect_inflation():
    small = Rect(0.85, 1.0, 0.855, 1.005)
    big = Rect(0.85, 1.0, 0.87, 1.02)
    hs = h_upper_rect(SpaceTag.H3, small, 0.0025, 0.0025, slack=SLACK)
    hb = h_upper_rect(SpaceTag.H3, big, 0.0025, 0.0025, slack=SLACK)
    assert hb >= hs


def test_h_upper_center_hardcode():
    rect = Rect(Fraction(3, 10), Fraction(3, 10), Fraction(1, 3), Fraction(1, 3))
    h_up = h_upper_rect(SpaceTag.S3, rect, 1e-6, 1e-6, slack=SLACK)
    assert h_up >= 12 * PI
    assert h_up - 12 * PI < 1e-5


def test_s_balancing_transfer():
    """Whenever F((v+w)/2, (v+w)/2) > 0 and w < v <= 2w, F(v, w) > 0."""
    rnd = random.Random(11)
    checked = 0
    while checked < 100:
        if checked % 2 == 0:  # H3
            w = 10 ** rnd.uniform(-1.5, 1.5)
            v = rnd.uniform(w * 1.0001, 2 * w)
            m = (v + w) / 2
            if hutchings_point(SpaceTag.H3, VolumePair(m, m)) > 0:
                assert hutchings_point(SpaceTag.H3, VolumePair(v, w)) > 0
                checked += 1
        else:  # S3
            wb = rnd.uniform(0.1, 0.25)
            vb = rnd.uniform(wb * 1.0001, min(2 * wb, 0.9 - wb))
            m = (vb + wb) / 2
            if m > 1 / 3:
                continue
            if hutchings_point(SpaceTag.S3, VolumePair(m * VOL, m * VOL)) > 0:
                assert hutchings_point(SpaceTag.S3,
                                       VolumePair(vb * VOL, wb * VOL)) > 0
                checked += 1


def test_sweep_area_table():
    t = SweepAreaTable(Fraction("0.0011595"), Fraction("0.000005"), slack=SLACK)
    i = t.index_at_or_below(Fraction("0.00274"))
    assert t.volume(i) <= Fraction("0.00274") < t.volume(i + 1)
    val = t[i]
    truth = float(oc.h3_sphere_area(oc.h3_radius_of_volume(float(t.volume(i)))))
    assert val < truth
    assert t[i] == val  # memoized and deterministic


def test_s3_grid_value_at_thirds_reproducible():
    """F at the all-equal configuration reconstructs from the 6 pi anchor."""
    v = VOL / 3
    f = hutchings_point(SpaceTag.S3, VolumePair(v, v))
    g = (2 * fm.s3_single_area_of_volume(v / 2)
         + fm.s3_single_area_of_volume(v)
         + fm.s3_single_area_of_volume(2 * v))
    assert abs(f - (g - 12 * PI)) < 1e-9
