"""H3 standard double bubbles in the curvature chart: equal-curvature
identities, interface limits, branch continuity and swap symmetry."""

import math
import random

import pytest

import oracles as oc
from bubbleproof import fastmath as fm
from bubbleproof.errors import DomainError
from bubbleproof.geometry import SpaceTag, sphere_area
from bubbleproof.sdb_h3 import (SdbCurvaturesH3, cap_areas_h3, cap_volumes_h3,
                                interface_cosh_y, sdb_area_h3, sdb_volumes_h3)

PI = math.pi


def test_equal_curvature_separating_cap():
    for k in (1.05, 1.3, 2.0, 5.0):
        a1, a2, a3 = cap_areas_h3(SdbCurvaturesH3(k, k))
        ref = 2 * PI * (k / math.sqrt(k * k - 0.75) - 1)
        assert abs(float(a3.mid) - ref) < 1e-12
        # geodesic-disk area at the matching interface radius
        cosh_y = float(interface_cosh_y(SdbCurvaturesH3(k, k)).mid)
        assert abs(ref - 2 * PI * (cosh_y - 1)) < 1e-12
        v, w = sdb_volumes_h3(SdbCurvaturesH3(k, k))
        assert float(v.mid) == pytest.approx(float(w.mid), abs=1e-14)
        vc1, vc2, vc3 = cap_volumes_h3(SdbCurvaturesH3(k, k))
        assert float(vc3.mid) == 0.0


def test_flat_limit_constants():
    """k -> 1: separating-cap area -> 2 pi, outer-cap area deficit -> 3 pi,
    outer-cap volume deficit -> pi(3/2 - ln 2)."""
    v_inf = PI * (1.5 - math.log(2))
    prev = None
    for k in (1.01, 1.001, 1.0001):
        c = SdbCurvaturesH3(k, k)
        a1, a2, a3 = cap_areas_h3(c)
        sphere = 4 * PI / (k * k - 1)
        vol_sphere = fm.h3_ball_volume_k(k)
        v, w = sdb_volumes_h3(c)
        gaps = (abs(float(a3.mid) - 2 * PI),
                abs(sphere - float(a1.mid) - 3 * PI),
                abs(vol_sphere - float(v.mid) - v_inf))
        if prev is not None:
            assert all(g < p for g, p in zip(gaps, prev))
        prev = gaps
    assert prev[0] < 4e-3 and prev[1] < 7e-3 and prev[2] < 3e-3


def test_branch_continuity_at_one_third():
    for k2 in (1.2, 2.0, 6.0):
        k1 = 2 * k2  # ratio exactly 1/3
        eps = 1e-9
        below = cap_areas_h3(SdbCurvaturesH3(k1 * (1 - eps), k2))
        above = cap_areas_h3(SdbCurvaturesH3(k1 * (1 + eps), k2))
        assert abs(float(below[0].mid) - float(above[0].mid)) < 1e-7
        vb = cap_volumes_h3(SdbCurvaturesH3(k1 * (1 - eps), k2))
        va = cap_volumes_h3(SdbCurvaturesH3(k1 * (1 + eps), k2))
        assert abs(float(vb[0].mid) - float(va[0].mid)) < 1e-7


def test_swap_symmetry_and_positivity():
    rnd = random.Random(17)
    for _ in range(100):
        k2 = 1 + 10 ** rnd.uniform(-2.5, 1.0)
        k1 = k2 + rnd.uniform(0, min(0.9, 0.3 * (k2 - 1) + 0.05))
        c = SdbCurvaturesH3(k1, k2)
        v, w = sdb_volumes_h3(c)
        v2, w2 = sdb_volumes_h3(SdbCurvaturesH3(k2, k1))
        assert abs(float(v.mid) - float(v2.mid)) < 1e-12 * max(1, float(v.mid))
        a = sdb_area_h3(c)
        a2 = sdb_area_h3(SdbCurvaturesH3(k2, k1))
        assert abs(float(a.mid) - float(a2.mid)) < 1e-12 * max(1, float(a.mid))
        assert float(v.lo) > 0 and float(w.lo) > 0
        assert float(v.hi) <= float(w.hi) + 1e-15  # canonical order
        vc1, vc2, vc3 = cap_volumes_h3(c)
        assert float(vc1.mid) + float(vc3.mid) > 0
        assert float(vc2.mid) - float(vc3.mid) > 0


def test_volume_monotone_in_own_curvature():
    rnd = random.Random(23)
    for _ in range(100):
        k2 = 1 + 10 ** rnd.uniform(-2, 1)
        k1 = k2 * (1 + rnd.uniform(0.001, 0.2))
        h = (k1 - 1) * 1e-4
        v_hi, _ = fm.h3_sdb_volumes(k1 - h, k2)
        v_lo, _ = fm.h3_sdb_volumes(k1 + h, k2)
        assert v_lo < v_hi  # volume strictly decreases as k1 grows


def test_interface_radius_bound():
    rnd = random.Random(29)
    for _ in range(100):
        k2 = 1 + 10 ** rnd.uniform(-3, 1)
        k1 = k2 * (1 + rnd.uniform(0, 0.25))
        cy = interface_cosh_y(SdbCurvaturesH3(k1, k2))
        assert float(cy.hi) < 2.0


def test_curvature_parameter_consistency():
    for k in (1.1, 1.5, 3.0, 12.0):
        r = math.atanh(1 / k)  # arccoth k
        enc = sphere_area(SpaceTag.H3, r)
        ref = 4 * PI / (k * k - 1)
        assert float(enc.lo) - 1e-9 <= ref <= float(enc.hi) + 1e-9


def test_against_oracle():
    rnd = random.Random(37)
    for _ in range(40):
        k2 = 1 + 10 ** rnd.uniform(-3, 1)
        k1 = k2 * (1 + rnd.uniform(0.0, 0.3))
        c = SdbCurvaturesH3(k1, k2)
        v, w = sdb_volumes_h3(c)
        tv, tw, ta, tcy = oc.h3_sdb(k1, k2)
        assert oc.in_enclosure(v, tv, widen=1e-12)
        assert oc.in_enclosure(w, tw, widen=1e-12)
        assert oc.in_enclosure(sdb_area_h3(c), ta, widen=1e-12)


def test_certified_area_padding():
    c = SdbCurvaturesH3(1.849, 1.787)
    enc = sdb_area_h3(c)
    up = sdb_area_h3(c, certify=True)
    assert up > float(enc.hi)
    assert up - float(enc.hi) >= 3 * 2.0 ** -24 * 0.99


def test_domain_guards():
    with pytest.raises(DomainError):
        SdbCurvaturesH3(0.9, 1.2)
    with pytest.raises(DomainError):
        sdb_volumes_h3(SdbCurvaturesH3(2.2, 1.2))  # horosphere boundary k1-k2=1

def test_horosphere_range_is_real():
    # hyposphere interface 0 < k1 - k2 < 1 stays analytically real
    v, w = sdb_volumes_h3(SdbCurvaturesH3(2.2, 1.5))
    assert float(v.lo) > 0 and float(w.lo) > 0
