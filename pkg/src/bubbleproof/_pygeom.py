"""Composite geometry kernels on certified enclosures (pure-Python backend).

Each function takes an `EncContext` plus exact point arguments and returns
enclosures of the closed-form spherical / hyperbolic quantities.  The S3
generating-curve machinery is written in the cotangent chart (k = cot r),
which stays finite across r = pi/2; the valid two-parameter chart is
0 < r1 <= r2 <= pi/2 with the equal-radius family extending to all of
(0, pi) through its own closed forms.
"""

from __future__ import annotations

from .enclosure import EncContext, Enclosure
from .errors import DegenerateConfig, DomainError

ONE_THIRD_NUM, ONE_THIRD_DEN = 1, 3


def _hull(a: Enclosure, b: Enclosure) -> Enclosure:
    return Enclosure(min(a.lo, b.lo), max(a.hi, b.hi))


# ---------------------------------------------------------------------------
# spheres
# ---------------------------------------------------------------------------

def s3_sphere_area(ctx: EncContext, r) -> Enclosure:
    r = ctx.enc(r)
    s = ctx.sin(r)
    return ctx.mul(ctx.mul(4, ctx.pi()), ctx.sqr(s))


def s3_sphere_volume(ctx: EncContext, r) -> Enclosure:
    r = ctx.enc(r)
    two_r = ctx.add(r, r)
    return ctx.mul(ctx.pi(), ctx.sub(two_r, ctx.sin(two_r)))


def h3_sphere_area_r(ctx: EncContext, r) -> Enclosure:
    r = ctx.enc(r)
    return ctx.mul(ctx.mul(4, ctx.pi()), ctx.sqr(ctx.sinh(r)))


def h3_sphere_volume_r(ctx: EncContext, r) -> Enclosure:
    r = ctx.enc(r)
    two_r = ctx.add(r, r)
    return ctx.mul(ctx.pi(), ctx.sub(ctx.sinh(two_r), two_r))


def h3_sphere_area_k(ctx: EncContext, k) -> Enclosure:
    k = ctx.enc(k)
    return ctx.div(ctx.mul(4, ctx.pi()), ctx.sub(ctx.sqr(k), 1))


def h3_sphere_volume_k(ctx: EncContext, k) -> Enclosure:
    k = ctx.enc(k)
    km1 = ctx.sub(ctx.sqr(k), 1)
    return ctx.mul(ctx.pi(), ctx.sub(ctx.div(ctx.mul(2, k), km1),
                                     ctx.mul(2, ctx.acoth(k))))


# ---------------------------------------------------------------------------
# caps (pole convention: phi = 0 empty cap, phi = pi full sphere)
# ---------------------------------------------------------------------------

def s3_cap_area(ctx: EncContext, r, phi) -> Enclosure:
    r, phi = ctx.enc(r), ctx.enc(phi)
    return ctx.mul(ctx.mul(ctx.mul(2, ctx.pi()), ctx.sqr(ctx.sin(r))),
                   ctx.sub(1, ctx.cos(phi)))


def h3_cap_area(ctx: EncContext, r, phi) -> Enclosure:
    r, phi = ctx.enc(r), ctx.enc(phi)
    return ctx.mul(ctx.mul(ctx.mul(2, ctx.pi()), ctx.sqr(ctx.sinh(r))),
                   ctx.sub(1, ctx.cos(phi)))


def h3_cap_volume(ctx: EncContext, r, phi) -> Enclosure:
    # pi ( sinh r cosh r (1 - cos phi) - r + atanh(tanh r cos phi) ); global
    r, phi = ctx.enc(r), ctx.enc(phi)
    c = ctx.cos(phi)
    sc = ctx.mul(ctx.sinh(r), ctx.cosh(r))
    inner = ctx.add(ctx.sub(ctx.mul(sc, ctx.sub(1, c)), r),
                    ctx.atanh(ctx.mul(ctx.tanh(r), c)))
    return ctx.mul(ctx.pi(), inner)


def _atan_cosphi_tan_r(ctx: EncContext, cosphi: Enclosure, r: Enclosure,
                       k: Enclosure | None = None) -> Enclosure:
    """Enclosure of atan(cos(phi) * tan(r)) for r in (0, pi/2], written in the
    cotangent chart so r at or near pi/2 stays finite."""
    half_pi = ctx.div(ctx.pi(), 2)
    if k is None:
        k = ctx.cot(r)
    if cosphi.lo > 0:
        return ctx.sub(half_pi, ctx.atan(ctx.div(k, cosphi)))
    if cosphi.hi < 0:
        return ctx.sub(ctx.neg(half_pi), ctx.atan(ctx.div(k, cosphi)))
    # cos(phi) straddles zero within rounding; fall back to the direct product
    if r.hi < float(half_pi.lo) - 1e-9:
        return ctx.atan(ctx.mul(cosphi, ctx.tan(r)))
    return Enclosure(ctx.neg(half_pi).lo, half_pi.hi)


def _principal_atan(ctx: EncContext, c: Enclosure, k: Enclosure) -> Enclosure:
    """Principal atan(cos(phi) * tan(r)) written through k = cot r, so the
    tangent pole never appears: atan(c/k-reciprocal) = s*pi/2 - atan(k/c)
    with s = sign(c) * sign(k)."""
    half_pi = ctx.div(ctx.pi(), 2)
    c_pos, c_neg = c.lo > 0, c.hi < 0
    k_pos, k_neg = k.lo > 0, k.hi < 0
    if (c_pos or c_neg) and (k_pos or k_neg):
        base = ctx.atan(ctx.div(k, c))
        if c_pos == k_pos:
            return ctx.sub(half_pi, base)
        return ctx.sub(ctx.neg(half_pi), base)
    if k_pos or k_neg:
        # cos(phi) straddles zero; the product is finite through 1/k
        return ctx.atan(ctx.div(c, ctx.div(1, k)))
    return Enclosure(ctx.neg(half_pi).lo, half_pi.hi)


def s3_cap_volume(ctx: EncContext, r, phi) -> Enclosure:
    """Signed volume contained between a cap and the disk spanning its
    boundary circle, positive toward the cap's pole.

    For r < pi/2 this is the classical closed form (quadrature-checked for
    every phi, including caps beyond a hemisphere); for r > pi/2 it is the
    continuous-in-r extension, the principal branch shifted by
    pi^2 * sign(cos phi), quadrature-checked on the unambiguous side
    phi < pi/2 and satisfying the full-ball and additivity identities
    everywhere.  No double equals pi/2, so point inputs branch exactly."""
    import math as _m
    r_in = r
    r, phi = ctx.enc(r), ctx.enc(phi)
    half_pi = ctx.div(ctx.pi(), 2)
    c = ctx.cos(phi)
    above = r.lo > float(_m.pi / 2)
    straddle = (not above) and r.hi > float(_m.pi / 2)
    at = _principal_atan(ctx, c, ctx.cot(r))
    if above or straddle:
        if c.lo > 0:
            shifted = ctx.add(at, ctx.pi())
        elif c.hi < 0:
            shifted = ctx.sub(at, ctx.pi())
        else:
            shifted = _hull(ctx.add(at, ctx.pi()), ctx.sub(at, ctx.pi()))
        at = shifted if above else _hull(at, shifted)
    sc = ctx.mul(ctx.sin(r), ctx.cos(r))
    inner = ctx.sub(ctx.sub(r, at), ctx.mul(sc, ctx.sub(1, c)))
    return ctx.mul(ctx.pi(), inner)


def _s3_cap_volume_principal(ctx: EncContext, r: Enclosure, cosphi: Enclosure,
                             k: Enclosure | None = None) -> Enclosure:
    """Principal-branch cap volume on the chart r in (0, pi/2]; this is the
    form the generating-curve decomposition composes."""
    at = _atan_cosphi_tan_r(ctx, cosphi, r, k)
    sc = ctx.mul(ctx.sin(r), ctx.cos(r))
    inner = ctx.sub(ctx.sub(r, at), ctx.mul(sc, ctx.sub(1, cosphi)))
    return ctx.mul(ctx.pi(), inner)


# ---------------------------------------------------------------------------
# S3 standard double bubbles, cotangent chart
# ---------------------------------------------------------------------------

def s3_generating(ctx: EncContext, r1, r2) -> dict:
    """Generating-curve data for the chart 0 < r1 <= r2 <= pi/2.

    Returns enclosures for theta, sin x, r3, the cap angles' sines/cosines
    and the branch-adjusted cos(psi1).  Raises DegenerateConfig when the
    construction does not close up (cot r1 + cot r2 <= 0 or an interface
    angle leaves its domain).
    """
    r1e, r2e = ctx.enc(r1), ctx.enc(r2)
    k1, k2 = ctx.cot(r1e), ctx.cot(r2e)
    equal = r1 == r2
    try:
        if equal:
            theta = ctx.enc(0)
            ratio = ctx.enc(0)
        else:
            den = ctx.add(k1, k2)
            if den.lo <= 0:
                raise DegenerateConfig(f"cot r1 + cot r2 <= 0 for ({r1}, {r2})")
            num = ctx.sub(k1, k2)
            ratio = ctx.div(num, den)
            theta = ctx.atan(ctx.mul(ctx.sqrt(ctx.enc(3)), ratio))
        c = ctx.cos(ctx.sub(ctx.div(ctx.pi(), 6), theta))
        if c.lo <= 0:
            raise DegenerateConfig("interface inclination left its domain")
        k3 = ctx.sub(k1, k2)
        if not equal and k3.lo < 0:
            # r1 < r2 forces k3 > 0; clip rounding underflow
            k3 = Enclosure(k3.lo * 0, k3.hi)
        sinx = ctx.div(c, ctx.sqrt(ctx.add(ctx.sqr(k1), ctx.sqr(c))))
        sin1 = ctx.div(sinx, ctx.sin(r1e))
        sin2 = ctx.div(sinx, ctx.sin(r2e))
        sin3 = ctx.mul(sinx, ctx.sqrt(ctx.add(1, ctx.sqr(k3))))
        for s in (sin1, sin2, sin3):
            if s.lo > 1:
                raise DegenerateConfig("interface angle has no real solution")
        def cos_from_sin(s):
            return ctx.sqrt(ctx.sub(1, ctx.sqr(s)))
        cos1, cos2, cos3 = cos_from_sin(sin1), cos_from_sin(sin2), cos_from_sin(sin3)
        phi1 = ctx.asin(sin1)
        # psi1: complement of phi1 when the separating cap bulges toward the
        # larger region (ratio <= 1/3), phi1 itself beyond
        third = ctx.div(ctx.enc(1), 3)
        if ratio.hi <= third.lo:
            cos_psi1 = ctx.neg(cos1)
            psi1 = ctx.sub(ctx.pi(), phi1)
        elif ratio.lo > third.hi:
            cos_psi1 = cos1
            psi1 = phi1
        else:
            cos_psi1 = _hull(ctx.neg(cos1), cos1)
            psi1 = _hull(ctx.sub(ctx.pi(), phi1), phi1)
        r3 = ctx.acot(k3)
        return {
            "theta": theta, "sinx": sinx, "x": ctx.asin(sinx), "r3": r3,
            "k1": k1, "k2": k2, "k3": k3,
            "sin_phi1": sin1, "cos_phi1": cos1, "phi1": phi1,
            "sin_phi2": sin2, "cos_phi2": cos2, "phi2": ctx.asin(sin2),
            "sin_phi3": sin3, "cos_phi3": cos3, "phi3": ctx.asin(sin3),
            "psi1": psi1, "cos_psi1": cos_psi1,
        }
    except DomainError as exc:
        raise DegenerateConfig(str(exc)) from exc


def s3_sdb(ctx: EncContext, r1, r2) -> dict:
    """Volumes and area of the standard double bubble with outer-cap radii
    r1 <= r2 on the chart r2 <= pi/2 (equal radii allowed anywhere)."""
    if r1 == r2:
        v = s3_equal_volume(ctx, r1)
        return {"v": v, "w": v, "area": s3_equal_area(ctx, r1)}
    half_pi_hi = ctx.div(ctx.pi(), 2).hi
    if not (0 < r1 < r2 <= half_pi_hi):
        raise DegenerateConfig(
            f"({r1}, {r2}) outside the ordered chart 0 < r1 < r2 <= pi/2")
    g = s3_generating(ctx, r1, r2)
    r1e, r2e = ctx.enc(r1), ctx.enc(r2)
    cap1 = _s3_cap_volume_principal(ctx, r1e, g["cos_psi1"], g["k1"])
    cap2 = _s3_cap_volume_principal(ctx, r2e, ctx.neg(g["cos_phi2"]), g["k2"])
    cap3 = _s3_cap_volume_principal(ctx, g["r3"], g["cos_phi3"], g["k3"])
    v = ctx.add(cap1, cap3)
    w = ctx.sub(cap2, cap3)
    area = ctx.add(
        ctx.add(s3_cap_area_from(ctx, r1e, ctx.cos(g["psi1"])),
                s3_cap_area_from(ctx, r2e, ctx.neg(ctx.cos(g["phi2"])))),
        s3_cap_area_from(ctx, g["r3"], ctx.cos(g["phi3"])))
    out = dict(g)
    out.update({"v": v, "w": w, "area": area,
                "cap1": cap1, "cap2": cap2, "cap3": cap3})
    return out


def s3_cap_area_from(ctx: EncContext, r: Enclosure, cosphi: Enclosure) -> Enclosure:
    return ctx.mul(ctx.mul(ctx.mul(2, ctx.pi()), ctx.sqr(ctx.sin(r))),
                   ctx.sub(1, cosphi))


def s3_exterior_from_complements(ctx: EncContext, r1, r2) -> Enclosure:
    """Exterior volume assembled from the complement caps; used as an
    independent conservation oracle for v + w + u = 2 pi^2."""
    g = s3_generating(ctx, r1, r2)
    r1e, r2e = ctx.enc(r1), ctx.enc(r2)
    total = ctx.mul(2, ctx.sqr(ctx.pi()))
    comp1 = _s3_cap_volume_principal(ctx, r1e, ctx.neg(g["cos_psi1"]), g["k1"])
    comp2 = _s3_cap_volume_principal(ctx, r2e, g["cos_phi2"], g["k2"])
    balls = ctx.add(s3_sphere_volume(ctx, r1), s3_sphere_volume(ctx, r2))
    return ctx.add(ctx.sub(total, balls), ctx.add(comp1, comp2))


def _s3_equal_family(ctx: EncContext, r):
    """sin/cos of the interface angle for the equal-radius family.

    Cancellation-free forms: |cos phi1| = sqrt(2) |cos r| / sqrt(7 + cos 2r)
    and cos x = 2 |cos phi1| (exact algebraic identities), so the enclosures
    stay tight through r = pi/2."""
    re = ctx.enc(r)
    seven = ctx.add(7, ctx.cos(ctx.add(re, re)))
    s = ctx.div(ctx.sqrt(ctx.enc(6)), ctx.sqrt(seven))           # sin phi1
    cos_r = ctx.cos(re)
    if cos_r.lo >= 0:
        abs_cos = cos_r
    elif cos_r.hi <= 0:
        abs_cos = ctx.neg(cos_r)
    else:
        abs_cos = Enclosure(cos_r.lo * 0, max(-cos_r.lo, cos_r.hi))
    cp = ctx.div(ctx.mul(ctx.sqrt(ctx.enc(2)), abs_cos), ctx.sqrt(seven))
    sinx = ctx.mul(s, ctx.sin(re))
    cosx = ctx.mul(2, cp)
    return re, seven, s, cp, sinx, cosx


def s3_equal_volume(ctx: EncContext, r) -> Enclosure:
    """Volume of one region of the equal-volume double bubble with outer-cap
    radius r; valid on all of (0, pi)."""
    re = ctx.enc(r)
    seven = ctx.sqrt(ctx.add(7, ctx.cos(ctx.add(re, re))))
    rt2 = ctx.sqrt(ctx.enc(2))
    cos_r = ctx.cos(re)
    ball = ctx.sub(ctx.add(re, re), ctx.sin(ctx.add(re, re)))
    t1 = ctx.mul(ctx.div(ctx.pi(), 2),
                 ctx.mul(ball, ctx.add(1, ctx.div(ctx.mul(rt2, cos_r), seven))))
    t2 = ctx.mul(ctx.pi(),
                 ctx.sub(ctx.atan(ctx.div(ctx.mul(rt2, ctx.sin(re)), seven)),
                         ctx.div(ctx.mul(ctx.mul(rt2, re), cos_r), seven)))
    return ctx.add(t1, t2)


def s3_equal_area(ctx: EncContext, r) -> Enclosure:
    """Total area of the equal-volume double bubble with outer-cap radius r.

    For r <= pi/2 the three caps are the classical ones; past pi/2 the outer
    boundary pieces are the complementary caps and the separating piece is
    the co-disk of the great sphere, so the angle bookkeeping flips.  The
    two expressions agree at r = pi/2 (total 6 pi)."""
    re, seven, s, cp, sinx, cosx = _s3_equal_family(ctx, r)
    half_pi = ctx.div(ctx.pi(), 2)
    two_pi = ctx.mul(2, ctx.pi())
    sin2 = ctx.sqr(ctx.sin(re))
    if re.hi <= half_pi.hi:
        outer = ctx.mul(ctx.mul(ctx.mul(4, ctx.pi()), sin2), ctx.add(1, cp))
        middle = ctx.mul(two_pi, ctx.sub(1, cosx))
        return ctx.add(outer, middle)
    if re.lo >= half_pi.lo:
        outer = ctx.mul(ctx.mul(ctx.mul(4, ctx.pi()), sin2), ctx.sub(1, cp))
        middle = ctx.mul(two_pi, ctx.add(1, cosx))
        return ctx.add(outer, middle)
    below = s3_equal_area(ctx, Enclosure(re.lo, half_pi.lo))
    above = s3_equal_area(ctx, Enclosure(half_pi.hi, re.hi))
    return _hull(below, above)


# ---------------------------------------------------------------------------
# H3 standard double bubbles, curvature chart (k = coth r, k1 >= k2 > 1)
# ---------------------------------------------------------------------------

def h3_chain(ctx: EncContext, k1, k2) -> dict:
    """Shared quantities of the H3 curvature chart."""
    k1e, k2e = ctx.enc(k1), ctx.enc(k2)
    if not (k2e.lo > 1 and k1e.lo > 1):
        raise DomainError("curvature parameters must exceed 1")
    if k1 < k2:
        raise DomainError("h3_chain expects k1 >= k2")
    equal = k1 == k2
    if equal:
        theta = ctx.enc(0)
        ratio = ctx.enc(0)
    else:
        num, den = ctx.sub(k1e, k2e), ctx.add(k1e, k2e)
        ratio = ctx.div(num, den)
        theta = ctx.atan(ctx.mul(ctx.sqrt(ctx.enc(3)), ratio))
    c = ctx.cos(ctx.sub(ctx.div(ctx.pi(), 6), theta))
    c2 = ctx.sqr(c)
    den2 = ctx.sub(ctx.sqr(k1e), c2)
    if den2.lo <= 0:
        raise DomainError("k1^2 - c^2 must stay positive")
    k3 = ctx.sub(k1e, k2e)
    if not equal and k3.lo < 0:
        k3 = Enclosure(k3.lo * 0, k3.hi)
    q1 = ctx.mul(k1e, ctx.sqrt(ctx.div(ctx.sub(1, c2), den2)))
    q2 = ctx.sqrt(ctx.div(ctx.sub(ctx.sqr(k1e), ctx.mul(ctx.sqr(k2e), c2)), den2))
    q3 = ctx.sqrt(ctx.div(ctx.sub(ctx.sqr(k1e), ctx.mul(ctx.sqr(k3), c2)), den2))
    cosh_y = ctx.div(k1e, ctx.sqrt(den2))
    return {"k1": k1e, "k2": k2e, "k3": k3, "ratio": ratio, "theta": theta,
            "c": c, "q1": q1, "q2": q2, "q3": q3, "cosh_y": cosh_y,
            "equal": equal}


def _h3_branch_close(ctx: EncContext, ch: dict):
    """True if the (k1-k2)/(k1+k2) < 1/3 branch applies; None on straddle."""
    third = ctx.div(ctx.enc(1), 3)
    if ch["ratio"].hi < third.lo:
        return True
    if ch["ratio"].lo > third.hi:
        return False
    return None


def h3_cap_areas(ctx: EncContext, k1, k2) -> tuple:
    ch = h3_chain(ctx, k1, k2)
    return _h3_cap_areas_from(ctx, ch), ch


def _h3_cap_areas_from(ctx: EncContext, ch: dict) -> tuple:
    two_pi = ctx.mul(2, ctx.pi())
    d1 = ctx.sub(ctx.sqr(ch["k1"]), 1)
    d2 = ctx.sub(ctx.sqr(ch["k2"]), 1)
    close = _h3_branch_close(ctx, ch)
    if close is None:
        a1 = _hull(ctx.div(ctx.mul(two_pi, ctx.add(1, ch["q1"])), d1),
                   ctx.div(ctx.mul(two_pi, ctx.sub(1, ch["q1"])), d1))
    elif close:
        a1 = ctx.div(ctx.mul(two_pi, ctx.add(1, ch["q1"])), d1)
    else:
        a1 = ctx.div(ctx.mul(two_pi, ctx.sub(1, ch["q1"])), d1)
    a2 = ctx.div(ctx.mul(two_pi, ctx.add(1, ch["q2"])), d2)
    d3 = ctx.sub(ctx.sqr(ch["k3"]), 1)
    if not (d3.hi < 0 or d3.lo > 0):
        raise DomainError("separating-cap curvature parameter at the "
                          "horosphere boundary |k1 - k2| = 1")
    a3 = ctx.div(ctx.mul(two_pi, ctx.sub(1, ch["q3"])), d3)
    return a1, a2, a3


def h3_cap_volumes(ctx: EncContext, k1, k2) -> tuple:
    ch = h3_chain(ctx, k1, k2)
    return _h3_cap_volumes_from(ctx, ch), ch


def _h3_cap_volumes_from(ctx: EncContext, ch: dict) -> tuple:
    k1e, k2e, k3 = ch["k1"], ch["k2"], ch["k3"]
    q1, q2, q3 = ch["q1"], ch["q2"], ch["q3"]
    d1 = ctx.sub(ctx.sqr(k1e), 1)
    d2 = ctx.sub(ctx.sqr(k2e), 1)
    close = _h3_branch_close(ctx, ch)

    def vc1_branch(is_close):
        if is_close:
            inner = ctx.add(ctx.sub(ctx.neg(ctx.acoth(k1e)),
                                    ctx.atanh(ctx.div(q1, k1e))),
                            ctx.div(ctx.mul(k1e, ctx.add(1, q1)), d1))
        else:
            inner = ctx.add(ctx.add(ctx.neg(ctx.acoth(k1e)),
                                    ctx.atanh(ctx.div(q1, k1e))),
                            ctx.div(ctx.mul(k1e, ctx.sub(1, q1)), d1))
        return ctx.mul(ctx.pi(), inner)

    if close is None:
        vc1 = _hull(vc1_branch(True), vc1_branch(False))
    else:
        vc1 = vc1_branch(close)
    vc2 = ctx.mul(ctx.pi(),
                  ctx.sub(ctx.sub(ctx.div(ctx.mul(k2e, ctx.add(1, q2)), d2),
                                  ctx.acoth(k2e)),
                          ctx.atanh(ctx.div(q2, k2e))))
    if ch["equal"]:
        vc3 = ctx.enc(0)
    else:
        d3 = ctx.sub(ctx.sqr(k3), 1)
        if not (d3.hi < 0 or d3.lo > 0):
            raise DomainError("separating-cap curvature parameter at the "
                              "horosphere boundary |k1 - k2| = 1")
        tail = ctx.div(ctx.mul(k3, ctx.sub(1, q3)), d3)
        if d3.hi < 0:
            if k3.lo <= 0:
                # analytically vc3 -> 0 with k3; evaluate the even-term form
                # on the hull (only reachable with near-identical curvatures)
                vc3 = Enclosure(min(tail.lo, 0), max(tail.hi, 0))
            else:
                head = ctx.sub(ctx.atanh(ctx.div(k3, q3)), ctx.atanh(k3))
                vc3 = ctx.mul(ctx.pi(), ctx.add(head, tail))
        else:
            head = ctx.sub(ctx.atanh(ctx.div(q3, k3)), ctx.acoth(k3))
            vc3 = ctx.mul(ctx.pi(), ctx.add(head, tail))
    return vc1, vc2, vc3


def h3_sdb(ctx: EncContext, k1, k2) -> dict:
    """Region volumes and total area for the H3 standard double bubble in
    canonical orientation k1 >= k2 (k1 bounds the smaller region)."""
    ch = h3_chain(ctx, k1, k2)
    vc1, vc2, vc3 = _h3_cap_volumes_from(ctx, ch)
    a1, a2, a3 = _h3_cap_areas_from(ctx, ch)
    if ch["equal"]:
        v, w = vc1, vc2
    else:
        v, w = ctx.add(vc1, vc3), ctx.sub(vc2, vc3)
    area = ctx.add(ctx.add(a1, a2), a3)
    out = dict(ch)
    out.update({"vc1": vc1, "vc2": vc2, "vc3": vc3,
                "a1": a1, "a2": a2, "a3": a3,
                "v": v, "w": w, "area": area})
    return out
