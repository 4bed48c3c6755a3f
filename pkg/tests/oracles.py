"""Independent high-precision reference implementations (mpmath, 40 digits).

These re-derive every quantity from the closed forms with arbitrary-precision
arithmetic and, where a formula's branch structure was in question, from
direct quadrature; they share no code with the package's backends.
"""

import mpmath as mp

mp.mp.dps = 40
PI = mp.pi
VOL_S3 = 2 * mp.pi ** 2


# -- single spheres ---------------------------------------------------------

def s3_ball_volume(r):
    return PI * (2 * r - mp.sin(2 * r))


def s3_sphere_area(r):
    return 4 * PI * mp.sin(r) ** 2


def h3_ball_volume(r):
    return PI * (mp.sinh(2 * r) - 2 * r)


def h3_sphere_area(r):
    return 4 * PI * mp.sinh(r) ** 2


def h3_radius_of_volume(v):
    v = mp.mpf(v)
    hi = mp.mpf(1)
    while h3_ball_volume(hi) < v:
        hi *= 2
    return mp.findroot(lambda r: h3_ball_volume(r) - v, [hi / 2, hi],
                       solver="anderson")


def s3_radius_of_volume(v):
    return mp.findroot(lambda r: s3_ball_volume(r) - mp.mpf(v),
                       [mp.mpf("1e-6"), PI - mp.mpf("1e-6")],
                       solver="anderson")


# -- S3 caps and bubbles ----------------------------------------------------

def s3_cap_volume(r, phi):
    """Branch-corrected signed cap-vs-disk volume (continuous in r)."""
    r, phi = mp.mpf(r), mp.mpf(phi)
    c = mp.cos(phi)
    if r == PI / 2:
        at = PI / 2 * mp.sign(c)
    else:
        at = mp.atan(c * mp.tan(r))
        if r > PI / 2:
            at += PI * mp.sign(c)
    return PI * (r - at - mp.cos(r) * mp.sin(r) * (1 - c))


def s3_cap_volume_quadrature(r, phi):
    """Two-sheet slab quadrature of the cap-vs-near-disk volume, valid for
    r < pi/2 (any phi) and r > pi/2 with phi < pi/2."""
    r, phi = mp.mpf(r), mp.mpf(phi)
    x = mp.asin(mp.sin(phi) * mp.sin(r))
    a = mp.atan(mp.tan(r) * mp.cos(phi))
    if r > PI / 2:
        a += PI * mp.sign(mp.cos(phi))
    top = lambda rho: mp.acos(mp.cos(r) / mp.cos(rho)) - a
    if phi <= PI / 2:
        return PI * mp.quad(lambda rho: top(rho) * mp.sin(2 * rho), [0, x])
    rho_max = min(r, PI - r)
    part1 = mp.quad(lambda rho: top(rho) * mp.sin(2 * rho), [0, x])
    part2 = mp.quad(lambda rho: 2 * mp.acos(mp.cos(r) / mp.cos(rho))
                    * mp.sin(2 * rho), [x, rho_max])
    return PI * (part1 + part2)


def s3_generating(r1, r2):
    r1, r2 = mp.mpf(r1), mp.mpf(r2)
    k1, k2 = mp.cot(r1), mp.cot(r2)
    if r1 == r2:
        theta = mp.mpf(0)
        ratio = mp.mpf(0)
    else:
        ratio = (k1 - k2) / (k1 + k2)
        theta = mp.atan(mp.sqrt(3) * ratio)
    c = mp.cos(PI / 6 - theta)
    k3 = k1 - k2
    sinx = c / mp.sqrt(k1 * k1 + c * c)
    phi1 = mp.asin(sinx / mp.sin(r1))
    phi2 = mp.asin(sinx / mp.sin(r2))
    phi3 = mp.asin(sinx * mp.sqrt(1 + k3 * k3))
    psi1 = PI - phi1 if ratio <= mp.mpf(1) / 3 else phi1
    r3 = PI / 2 - mp.atan(k3)
    return dict(theta=theta, sinx=sinx, x=mp.asin(sinx), r3=r3, phi1=phi1,
                phi2=phi2, phi3=phi3, psi1=psi1, ratio=ratio)


def s3_sdb_volumes(r1, r2):
    if r1 == r2:
        v = s3_equal_volume(r1)
        return v, v
    g = s3_generating(r1, r2)
    cap3 = s3_cap_volume_principal(g["r3"], g["phi3"])
    v = s3_cap_volume_principal(mp.mpf(r1), g["psi1"]) + cap3
    w = s3_cap_volume_principal(mp.mpf(r2), PI - g["phi2"]) - cap3
    return v, w


def s3_cap_volume_principal(r, phi):
    return PI * (r - mp.atan(mp.cos(phi) * mp.tan(r))
                 - mp.cos(r) * mp.sin(r) * (1 - mp.cos(phi)))


def s3_sdb_area(r1, r2):
    if r1 == r2:
        return s3_equal_area(r1)
    g = s3_generating(r1, r2)
    cap = lambda r, phi: 2 * PI * mp.sin(r) ** 2 * (1 - mp.cos(phi))
    return (cap(mp.mpf(r1), g["psi1"]) + cap(mp.mpf(r2), PI - g["phi2"])
            + cap(g["r3"], g["phi3"]))


def s3_equal_volume(r):
    r = mp.mpf(r)
    s = mp.sqrt(7 + mp.cos(2 * r))
    return (PI / 2 * (2 * r - mp.sin(2 * r)) * (1 + mp.sqrt(2) * mp.cos(r) / s)
            + PI * (mp.atan(mp.sqrt(2) * mp.sin(r) / s)
                    - mp.sqrt(2) * r * mp.cos(r) / s))


def s3_equal_area(r):
    r = mp.mpf(r)
    s = mp.sqrt(6) / mp.sqrt(7 + mp.cos(2 * r))
    cp = mp.sqrt(max(1 - s * s, mp.mpf(0)))
    sinx = s * mp.sin(r)
    cosx = mp.sqrt(1 - sinx ** 2)
    if r <= PI / 2:
        return 4 * PI * mp.sin(r) ** 2 * (1 + cp) + 2 * PI * (1 - cosx)
    return 4 * PI * mp.sin(r) ** 2 * (1 - cp) + 2 * PI * (1 + cosx)


def s3_solve_equal(v):
    return mp.findroot(lambda r: s3_equal_volume(r) - mp.mpf(v),
                       [mp.mpf("1e-6"), PI - mp.mpf("1e-6")], solver="anderson")


# -- H3 curvature chart -----------------------------------------------------

def h3_chain(k1, k2):
    k1, k2 = mp.mpf(k1), mp.mpf(k2)
    th = mp.mpf(0) if k1 == k2 else mp.atan(mp.sqrt(3) * (k1 - k2) / (k1 + k2))
    c = mp.cos(PI / 6 - th)
    den = k1 * k1 - c * c
    k3 = k1 - k2
    q1 = k1 * mp.sqrt((1 - c * c) / den)
    q2 = mp.sqrt((k1 * k1 - k2 * k2 * c * c) / den)
    q3 = mp.sqrt((k1 * k1 - k3 * k3 * c * c) / den)
    return c, k3, q1, q2, q3


def h3_sdb(k1, k2):
    """(v, w, area, cosh_y) for k1 >= k2 > 1."""
    k1, k2 = mp.mpf(k1), mp.mpf(k2)
    c, k3, q1, q2, q3 = h3_chain(k1, k2)
    close = (k1 - k2) / (k1 + k2) < mp.mpf(1) / 3
    acoth = lambda x: mp.atanh(1 / x)
    if close:
        vc1 = PI * (-acoth(k1) - mp.atanh(q1 / k1)
                    + k1 * (1 + q1) / (k1 * k1 - 1))
        a1 = 2 * PI * (1 + q1) / (k1 * k1 - 1)
    else:
        vc1 = PI * (-acoth(k1) + mp.atanh(q1 / k1)
                    + k1 * (1 - q1) / (k1 * k1 - 1))
        a1 = 2 * PI * (1 - q1) / (k1 * k1 - 1)
    vc2 = PI * (k2 * (1 + q2) / (k2 * k2 - 1) - acoth(k2) - mp.atanh(q2 / k2))
    a2 = 2 * PI * (1 + q2) / (k2 * k2 - 1)
    a3 = 2 * PI * (1 - q3) / (k3 * k3 - 1) if k3 != 0 else \
        2 * PI * (k1 / mp.sqrt(k1 * k1 - c * c) - 1)
    if k3 == 0:
        vc3 = mp.mpf(0)
    elif k3 > 1:
        vc3 = PI * (mp.atanh(q3 / k3) - acoth(k3)
                    + k3 * (1 - q3) / (k3 * k3 - 1))
    else:
        vc3 = PI * (mp.atanh(k3 / q3) - mp.atanh(k3)
                    + k3 * (1 - q3) / (k3 * k3 - 1))
    v = vc1 + (vc3 if k3 != 0 else 0)
    w = vc2 - (vc3 if k3 != 0 else 0)
    return v, w, a1 + a2 + a3, k1 / mp.sqrt(k1 * k1 - c * c)


def h3_cap_volume_rphi(r, phi):
    r, phi = mp.mpf(r), mp.mpf(phi)
    return PI * (mp.sinh(r) * mp.cosh(r) * (1 - mp.cos(phi)) - r
                 + mp.atanh(mp.tanh(r) * mp.cos(phi)))


def h3_cap_volume_quadrature(r, phi):
    """Slab quadrature in cylindrical coordinates (single regime in H3)."""
    r, phi = mp.mpf(r), mp.mpf(phi)
    y = mp.asinh(mp.sin(phi) * mp.sinh(r))
    a = mp.atanh(mp.tanh(r) * mp.cos(phi))
    top = lambda rho: mp.acosh(mp.cosh(r) / mp.cosh(rho)) - a
    if phi <= PI / 2:
        return PI * mp.quad(lambda rho: top(rho) * mp.sinh(2 * rho), [0, y])
    part1 = mp.quad(lambda rho: top(rho) * mp.sinh(2 * rho), [0, y])
    part2 = mp.quad(lambda rho: 2 * mp.acosh(mp.cosh(r) / mp.cosh(rho))
                    * mp.sinh(2 * rho), [y, r])
    return PI * (part1 + part2)


def h3_solve_pair(v, w):
    """High-precision curvature pair for region volumes (v, w), v <= w."""
    v, w = mp.mpf(v), mp.mpf(w)
    import bubbleproof.fastmath as fm
    k1s, k2s = fm.h3_solve_pair(float(v), float(w))
    f = lambda k1, k2: (h3_sdb(k1, k2)[0] - v, h3_sdb(k1, k2)[1] - w)
    k1, k2 = mp.findroot(f, (mp.mpf(k1s), mp.mpf(k2s)))
    return k1, k2


def h3_hutchings(v, w):
    """High-precision F(v, w) in H3 (v <= w)."""
    v, w = mp.mpf(v), mp.mpf(w)
    area_of = lambda x: h3_sphere_area(h3_radius_of_volume(x))
    g = 2 * area_of(v / 2) + area_of(w) + area_of(v + w)
    k1, k2 = h3_solve_pair(v, w)
    return g - 2 * h3_sdb(k1, k2)[2]


# -- exact containment helper -------------------------------------------------

from fractions import Fraction


def mpf_fraction(x) -> Fraction:
    """Exact rational value of an mpmath mpf."""
    sign, man, exp, _ = mp.mpf(x)._mpf_
    fr = Fraction(man) * (Fraction(2) ** exp)
    return -fr if sign else fr


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(x)
    return Fraction(*x.as_integer_ratio())  # gmpy2.mpfr


def in_enclosure(enc, truth, widen=0.0) -> bool:
    """Exact check that the high-precision truth lies inside the enclosure
    (optionally widened symmetrically by `widen`)."""
    t = mpf_fraction(truth)
    lo = _to_fraction(enc.lo) - Fraction(widen) if widen else _to_fraction(enc.lo)
    hi = _to_fraction(enc.hi) + Fraction(widen) if widen else _to_fraction(enc.hi)
    return lo <= t <= hi
