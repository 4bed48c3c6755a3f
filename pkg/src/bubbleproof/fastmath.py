"""Non-rigorous midpoint arithmetic: plain double-precision evaluation of the
same closed forms, plus smooth inverse solvers.

This module is the clearly-separated fast path used for plotting, asymptotic
spot checks and solver seeding.  Nothing here feeds a certified bound; the
rigorous counterparts live in the backend kernels and `solvers`.
"""

from __future__ import annotations

import math

from .errors import DegenerateConfig, DomainError, NoConvergence

PI = math.pi
VOL_S3 = 2 * PI ** 2


# ---------------------------------------------------------------------------
# spheres
# ---------------------------------------------------------------------------

def s3_ball_volume(r):
    return PI * (2 * r - math.sin(2 * r))


def s3_sphere_area(r):
    return 4 * PI * math.sin(r) ** 2


def h3_ball_volume(r):
    return PI * (math.sinh(2 * r) - 2 * r)


def h3_sphere_area(r):
    return 4 * PI * math.sinh(r) ** 2


def h3_ball_volume_k(k):
    return PI * (2 * k / (k * k - 1) - 2 * math.atanh(1 / k))


def h3_sphere_area_k(k):
    return 4 * PI / (k * k - 1)


def s3_radius_of_volume(v, tol=1e-14):
    """Radius of the S3 ball with volume v, bisection + Newton polish."""
    if not 0 < v < VOL_S3:
        raise DomainError("volume outside (0, |S3|)")
    lo, hi = 0.0, PI
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if s3_ball_volume(mid) < v:
            lo = mid
        else:
            hi = mid
    r = 0.5 * (lo + hi)
    for _ in range(4):
        a = s3_sphere_area(r)
        if a > 1e-12:
            r -= (s3_ball_volume(r) - v) / a
    return min(max(r, 0.0), PI)


def h3_radius_of_volume(v):
    """Radius of the H3 ball with volume v (any positive v)."""
    if not v > 0:
        raise DomainError("volume must be positive")
    hi = 1.0
    while h3_ball_volume(hi) < v:
        hi *= 2
    lo = 0.0
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if h3_ball_volume(mid) < v:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def h3_curvature_of_volume(v):
    return 1.0 / math.tanh(h3_radius_of_volume(v))


# ---------------------------------------------------------------------------
# S3 double bubbles (cotangent chart, r1 <= r2 <= pi/2; equal radii anywhere)
# ---------------------------------------------------------------------------

def s3_generating(r1, r2):
    k1, k2 = 1 / math.tan(r1), 1 / math.tan(r2)
    if r1 == r2:
        theta, ratio = 0.0, 0.0
    else:
        den = k1 + k2
        if den <= 0:
            raise DegenerateConfig("cot r1 + cot r2 <= 0")
        ratio = (k1 - k2) / den
        theta = math.atan(math.sqrt(3) * ratio)
    c = math.cos(PI / 6 - theta)
    if c <= 0:
        raise DegenerateConfig("interface inclination out of range")
    k3 = max(k1 - k2, 0.0)
    sinx = c / math.hypot(k1, c)
    args = (sinx / math.sin(r1), sinx / math.sin(r2),
            sinx * math.hypot(1.0, k3))
    if max(args) > 1 + 1e-12:
        raise DegenerateConfig("interface angle has no real solution")
    phi1, phi2, phi3 = (math.asin(min(a, 1.0)) for a in args)
    psi1 = PI - phi1 if ratio <= 1 / 3 else phi1
    r3 = PI / 2 - math.atan(k3)
    return {"theta": theta, "x": math.asin(sinx), "r3": r3,
            "phi1": phi1, "psi1": psi1, "phi2": phi2, "phi3": phi3,
            "k1": k1, "k2": k2, "k3": k3, "ratio": ratio}


def _s3_cap_volume_principal(r, phi):
    return PI * (r - math.atan(math.cos(phi) * math.tan(r))
                 - math.sin(r) * math.cos(r) * (1 - math.cos(phi)))


def s3_equal_volume(r):
    s = math.sqrt(7 + math.cos(2 * r))
    return (PI / 2 * (2 * r - math.sin(2 * r)) * (1 + math.sqrt(2) * math.cos(r) / s)
            + PI * (math.atan(math.sqrt(2) * math.sin(r) / s)
                    - math.sqrt(2) * r * math.cos(r) / s))


def s3_equal_area(r):
    s = math.sqrt(6.0) / math.sqrt(7 + math.cos(2 * r))
    cp = math.sqrt(max(1 - s * s, 0.0))
    sinx = s * math.sin(r)
    cosx = math.sqrt(max(1 - sinx * sinx, 0.0))
    if r <= PI / 2:
        return 4 * PI * math.sin(r) ** 2 * (1 + cp) + 2 * PI * (1 - cosx)
    return 4 * PI * math.sin(r) ** 2 * (1 - cp) + 2 * PI * (1 + cosx)


def s3_sdb_volumes(r1, r2):
    if r1 == r2:
        v = s3_equal_volume(r1)
        return v, v
    if r1 > r2:
        w, v = s3_sdb_volumes(r2, r1)
        return v, w
    if r2 > PI / 2 + 1e-15:
        raise DegenerateConfig("chart requires r2 <= pi/2 for unequal radii")
    g = s3_generating(r1, r2)
    cap3 = _s3_cap_volume_principal(g["r3"], g["phi3"])
    v = _s3_cap_volume_principal(r1, g["psi1"]) + cap3
    w = _s3_cap_volume_principal(r2, PI - g["phi2"]) - cap3
    return v, w


def s3_sdb_area(r1, r2):
    if r1 == r2:
        return s3_equal_area(r1)
    if r1 > r2:
        return s3_sdb_area(r2, r1)
    g = s3_generating(r1, r2)
    def cap_area(r, phi):
        return 2 * PI * math.sin(r) ** 2 * (1 - math.cos(phi))
    return (cap_area(r1, g["psi1"]) + cap_area(r2, PI - g["phi2"])
            + cap_area(g["r3"], g["phi3"]))


def s3_solve_equal(v, tol=1e-13):
    """Outer-cap radius of the equal-volume bubble with region volume v."""
    if not 0 < v < VOL_S3 / 2:
        raise DomainError("equal-volume region must lie in (0, |S3|/2)")
    lo, hi = 1e-9, PI - 1e-9
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if s3_equal_volume(mid) < v:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def s3_solve_pair(v, w, tol=1e-12, max_iter=80):
    """(r1, r2) with region volumes (v, w); increasing-region inputs only."""
    if v == w:
        r = s3_solve_equal(v)
        return r, r
    if not (0 < v < w and v + 2 * w < VOL_S3 + 1e-12):
        raise DegenerateConfig("pair outside the ordered increasing region")
    r1 = min(s3_radius_of_volume(v) * 1.05, PI / 2 - 1e-6)
    r2 = min(s3_radius_of_volume(w), PI / 2 - 1e-6)
    if r1 >= r2:
        r1 = 0.9 * r2
    for it in range(max_iter):
        try:
            f1, f2 = s3_sdb_volumes(r1, r2)
        except DegenerateConfig:
            r1 *= 0.95
            r2 = min(r2 * 1.01, PI / 2 - 1e-9)
            continue
        e1, e2 = f1 - v, f2 - w
        if abs(e1) < tol * max(v, 1.0) and abs(e2) < tol * max(w, 1.0):
            return r1, r2
        h1 = max(1e-8, 1e-7 * r1)
        h2 = max(1e-8, 1e-7 * r2)
        try:
            g1v, g1w = s3_sdb_volumes(min(r1 + h1, r2 * (1 - 1e-12)), r2)
            g2v, g2w = s3_sdb_volumes(r1, min(r2 + h2, PI / 2 - 1e-12))
        except DegenerateConfig:
            h1, h2 = -h1, -h2
            g1v, g1w = s3_sdb_volumes(r1 + h1, r2)
            g2v, g2w = s3_sdb_volumes(r1, r2 + h2)
        j11, j21 = (g1v - f1) / h1, (g1w - f2) / h1
        j12, j22 = (g2v - f1) / h2, (g2w - f2) / h2
        det = j11 * j22 - j12 * j21
        if abs(det) < 1e-14:
            raise NoConvergence("singular Jacobian in s3_solve_pair")
        d1 = (e1 * j22 - e2 * j12) / det
        d2 = (e2 * j11 - e1 * j21) / det
        step = 1.0
        for _ in range(30):
            n1, n2 = r1 - step * d1, r2 - step * d2
            if 1e-9 < n1 < n2 <= PI / 2 - 1e-12:
                break
            step *= 0.5
        else:
            raise NoConvergence("no feasible Newton step in s3_solve_pair")
        r1, r2 = n1, n2
    raise NoConvergence(f"s3_solve_pair at ({v}, {w})")


# ---------------------------------------------------------------------------
# H3 double bubbles (curvature chart)
# ---------------------------------------------------------------------------

def h3_chain(k1, k2):
    th = 0.0 if k1 == k2 else math.atan(math.sqrt(3) * (k1 - k2) / (k1 + k2))
    c = math.cos(PI / 6 - th)
    den = k1 * k1 - c * c
    k3 = k1 - k2
    q1 = k1 * math.sqrt(max(1 - c * c, 0.0) / den)
    q2 = math.sqrt((k1 * k1 - k2 * k2 * c * c) / den)
    q3 = math.sqrt((k1 * k1 - k3 * k3 * c * c) / den)
    return c, k3, q1, q2, q3


def h3_sdb_volumes(k1, k2):
    """Region volumes (volume bounded by the k1-cap first); any order of
    curvatures, swap handled like the canonical chart."""
    if k1 < k2:
        w, v = h3_sdb_volumes(k2, k1)
        return v, w
    if k2 <= 1:
        raise DomainError("curvature parameters must exceed 1")
    c, k3, q1, q2, q3 = h3_chain(k1, k2)
    close = (k1 - k2) / (k1 + k2) < 1 / 3
    if close:
        vc1 = PI * (-math.atanh(1 / k1) - math.atanh(q1 / k1)
                    + k1 * (1 + q1) / (k1 * k1 - 1))
    else:
        vc1 = PI * (-math.atanh(1 / k1) + math.atanh(q1 / k1)
                    + k1 * (1 - q1) / (k1 * k1 - 1))
    vc2 = PI * (k2 * (1 + q2) / (k2 * k2 - 1) - math.atanh(1 / k2)
                - math.atanh(q2 / k2))
    if k3 == 0:
        return vc1, vc2
    if k3 >= 1:
        if k3 == 1:
            raise DomainError("horosphere interface |k1 - k2| = 1")
        vc3 = PI * (math.atanh(q3 / k3) - math.atanh(1 / k3)
                    + k3 * (1 - q3) / (k3 * k3 - 1))
    else:
        vc3 = PI * (math.atanh(k3 / q3) - math.atanh(k3)
                    + k3 * (1 - q3) / (k3 * k3 - 1))
    return vc1 + vc3, vc2 - vc3


def h3_sdb_area(k1, k2):
    if k1 < k2:
        return h3_sdb_area(k2, k1)
    c, k3, q1, q2, q3 = h3_chain(k1, k2)
    close = (k1 - k2) / (k1 + k2) < 1 / 3
    a1 = 2 * PI * ((1 + q1) if close else (1 - q1)) / (k1 * k1 - 1)
    a2 = 2 * PI * (1 + q2) / (k2 * k2 - 1)
    a3 = 2 * PI * (1 - q3) / (k3 * k3 - 1)
    return a1 + a2 + a3


def h3_interface(k1, k2):
    """(y, theta): interface-disk radius and separating-cap inclination."""
    if k1 < k2:
        k1, k2 = k2, k1
    c, k3, q1, q2, q3 = h3_chain(k1, k2)
    cosh_y = k1 / math.sqrt(k1 * k1 - c * c)
    y = math.acosh(cosh_y)
    a3 = 2 * PI * (1 - q3) / (k3 * k3 - 1)
    cos_th = (2 * PI * math.sinh(y) ** 2 / a3 - 1) / cosh_y
    return y, math.acos(min(max(cos_th, -1.0), 1.0))


def h3_solve_equal(v):
    """Curvature parameter of the equal-volume bubble with region volume v."""
    lo = 1 + 1e-12
    hi = 2.0
    while h3_sdb_volumes(hi, hi)[0] > v:
        hi = 1 + 2 * (hi - 1)
        if hi > 1e9:
            raise NoConvergence("h3_solve_equal upper bracket")
    while h3_sdb_volumes(lo, lo)[0] < v:
        lo = 1 + 2 * (lo - 1)
    # volumes decrease in k; bisect in log(k-1)
    ulo, uhi = math.log(hi - 1), math.log(lo - 1)
    for _ in range(100):
        um = 0.5 * (ulo + uhi)
        if h3_sdb_volumes(1 + math.exp(um), 1 + math.exp(um))[0] < v:
            ulo = um
        else:
            uhi = um
    return 1 + math.exp(0.5 * (ulo + uhi))


def h3_solve_pair(v, w, tol=3e-12, max_iter=120):
    """(k1, k2) whose region volumes are (v, w), v <= w; damped Newton in
    log(k - 1) coordinates, seeded from single-sphere curvatures."""
    if not 0 < v <= w:
        raise DomainError("need 0 < v <= w")
    if v == w:
        k = h3_solve_equal(v)
        return k, k
    V_INF = PI * (1.5 - math.log(2))
    k1 = h3_curvature_of_volume(v + min(V_INF, 0.8 * v))
    k2 = h3_curvature_of_volume(w + min(V_INF, 0.8 * w))
    u1, u2 = math.log(k1 - 1), math.log(k2 - 1)

    def volumes(u1, u2):
        a, b = 1 + math.exp(u1), 1 + math.exp(u2)
        if a < b:  # keep canonical order k1 >= k2
            a = b
        return h3_sdb_volumes(a, b)

    best = None
    for it in range(max_iter):
        k1, k2 = 1 + math.exp(u1), 1 + math.exp(u2)
        if k1 < k2:
            u1 = u2
            k1 = k2
        f1, f2 = h3_sdb_volumes(k1, k2)
        e1, e2 = math.log(f1 / v), math.log(f2 / w)
        err = max(abs(e1), abs(e2))
        if best is None or err < best[0]:
            best = (err, k1, k2)
        if err < tol:
            return k1, k2
        h = 1e-7
        g1v, g1w = volumes(u1 + h, u2)
        g2v, g2w = volumes(u1, u2 + h)
        j11, j21 = math.log(g1v / f1) / h, math.log(g1w / f2) / h
        j12, j22 = math.log(g2v / f1) / h, math.log(g2w / f2) / h
        det = j11 * j22 - j12 * j21
        if abs(det) < 1e-18:
            break
        d1 = (e1 * j22 - e2 * j12) / det
        d2 = (e2 * j11 - e1 * j21) / det
        damp = min(1.0, 2.0 / max(abs(d1), abs(d2), 1e-30))
        u1 -= damp * d1
        u2 -= damp * d2
    # double precision cannot always push the relative residual to tol for
    # very large volumes; accept a stalled solve within roundoff territory
    if best is not None and best[0] < 1e-9:
        return best[1], best[2]
    raise NoConvergence(f"h3_solve_pair at ({v}, {w})")


# ---------------------------------------------------------------------------
# Hutchings function, midpoint evaluation
# ---------------------------------------------------------------------------

def s3_single_area_of_volume(v):
    return s3_sphere_area(s3_radius_of_volume(v))


def h3_single_area_of_volume(v):
    return h3_sphere_area(h3_radius_of_volume(v))


def hutchings_s3(v, w):
    """2A(v/2) + A(w) + A(v+w) - 2A(v,w) in S3; requires v + w < |S3|."""
    if not (v > 0 and w > 0 and v + w < VOL_S3):
        raise DomainError("volumes outside the S3 simplex")
    g = (2 * s3_single_area_of_volume(v / 2) + s3_single_area_of_volume(w)
         + s3_single_area_of_volume(v + w))
    u = VOL_S3 - v - w
    a, b = sorted((v, w))
    if a == b == u:
        area = 6 * PI
    elif a == b:
        area = s3_equal_area(s3_solve_equal(a))
    elif b == u:
        # permutation: the (a, b, b) partition is the equal pair (b, b)
        area = s3_equal_area(s3_solve_equal(b))
    else:
        if not a + 2 * b < VOL_S3:
            # chart the same partition through the exterior instead
            a, b = sorted((a, u))
        r1, r2 = s3_solve_pair(a, b)
        area = s3_sdb_area(r1, r2)
    return g - 2 * area


def hutchings_h3(v, w):
    if not (v > 0 and w > 0):
        raise DomainError("volumes must be positive")
    g = (2 * h3_single_area_of_volume(v / 2) + h3_single_area_of_volume(w)
         + h3_single_area_of_volume(v + w))
    a, b = sorted((v, w))
    k1, k2 = h3_solve_pair(a, b)
    return g - 2 * h3_sdb_area(k1, k2)
