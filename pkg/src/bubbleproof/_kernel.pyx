# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled double-precision interval kernels (the hot path of the proof
engine at 53-bit working precision).

Arithmetic endpoints are padded outward by 1 ulp (IEEE round-to-nearest is
within 0.5 ulp); libm transcendentals by 3 ulps, which dominates their
documented error on this domain.  The pure-Python MPFR backend provides the
correctly-rounded reference; the containment test suite drives both against
a high-precision oracle.
"""

from libc.math cimport (INFINITY, M_PI, atan, atanh, cos, cosh, exp, log,
                        nextafter, sin, sinh, sqrt, tan, tanh, asin, acos)


cdef struct ivl:
    double lo
    double hi

cdef double PI_LO = nextafter(M_PI, 0.0)
cdef double PI_HI = nextafter(M_PI, 4.0)

cdef inline double dn1(double x):
    return nextafter(x, -INFINITY)

cdef inline double up1(double x):
    return nextafter(x, INFINITY)

cdef inline double dn3(double x):
    return nextafter(nextafter(nextafter(x, -INFINITY), -INFINITY), -INFINITY)

cdef inline double up3(double x):
    return nextafter(nextafter(nextafter(x, INFINITY), INFINITY), INFINITY)

cdef inline ivl ipoint(double x):
    cdef ivl r
    r.lo = x; r.hi = x
    return r

cdef inline ivl imk(double lo, double hi):
    cdef ivl r
    r.lo = lo; r.hi = hi
    return r

cdef ivl IPI = imk(PI_LO, PI_HI)

cdef inline ivl iadd(ivl a, ivl b):
    return imk(dn1(a.lo + b.lo), up1(a.hi + b.hi))

cdef inline ivl isub(ivl a, ivl b):
    return imk(dn1(a.lo - b.hi), up1(a.hi - b.lo))

cdef inline ivl ineg(ivl a):
    return imk(-a.hi, -a.lo)

cdef inline double dmin4(double a, double b, double c, double d):
    cdef double m = a
    if b < m: m = b
    if c < m: m = c
    if d < m: m = d
    return m

cdef inline double dmax4(double a, double b, double c, double d):
    cdef double m = a
    if b > m: m = b
    if c > m: m = c
    if d > m: m = d
    return m

cdef inline ivl imul(ivl a, ivl b):
    cdef double p1 = a.lo * b.lo, p2 = a.lo * b.hi
    cdef double p3 = a.hi * b.lo, p4 = a.hi * b.hi
    return imk(dn1(dmin4(p1, p2, p3, p4)), up1(dmax4(p1, p2, p3, p4)))

cdef inline ivl iscale(ivl a, double c):
    # c exact (small integers)
    if c >= 0:
        return imk(dn1(a.lo * c), up1(a.hi * c))
    return imk(dn1(a.hi * c), up1(a.lo * c))

cdef int _err = 0  # sticky in-kernel domain flag

cdef inline ivl idiv(ivl a, ivl b):
    global _err
    if b.lo <= 0.0 <= b.hi:
        _err = 1
        return imk(-INFINITY, INFINITY)
    cdef double p1 = a.lo / b.lo, p2 = a.lo / b.hi
    cdef double p3 = a.hi / b.lo, p4 = a.hi / b.hi
    return imk(dn1(dmin4(p1, p2, p3, p4)), up1(dmax4(p1, p2, p3, p4)))

cdef inline ivl isqr(ivl a):
    if a.lo >= 0:
        return imk(dn1(a.lo * a.lo), up1(a.hi * a.hi))
    if a.hi <= 0:
        return imk(dn1(a.hi * a.hi), up1(a.lo * a.lo))
    return imk(0.0, up1(dmax4(a.lo * a.lo, a.hi * a.hi, 0, 0)))

cdef inline ivl isqrt(ivl a):
    global _err
    if a.hi < 0:
        _err = 1
        return imk(0.0, 0.0)
    cdef double lo = a.lo if a.lo > 0 else 0.0
    return imk(dn1(sqrt(lo)), up1(sqrt(a.hi)))

cdef inline ivl iexp(ivl a):
    return imk(dn3(exp(a.lo)), up3(exp(a.hi)))

cdef inline ivl ilog(ivl a):
    global _err
    if a.lo <= 0:
        _err = 1
        return imk(-INFINITY, INFINITY)
    return imk(dn3(log(a.lo)), up3(log(a.hi)))

cdef inline ivl isinh(ivl a):
    return imk(dn3(sinh(a.lo)), up3(sinh(a.hi)))

cdef inline ivl icosh(ivl a):
    if a.lo >= 0:
        return imk(dn3(cosh(a.lo)), up3(cosh(a.hi)))
    if a.hi <= 0:
        return imk(dn3(cosh(a.hi)), up3(cosh(a.lo)))
    return imk(1.0, up3(cosh(a.lo if -a.lo > a.hi else a.hi)))

cdef inline ivl itanh(ivl a):
    return imk(dn3(tanh(a.lo)), up3(tanh(a.hi)))

cdef inline ivl iatan(ivl a):
    return imk(dn3(atan(a.lo)), up3(atan(a.hi)))

cdef inline ivl iasin(ivl a):
    global _err
    if a.lo > 1.0 or a.hi < -1.0:
        _err = 1
        return imk(-INFINITY, INFINITY)
    cdef double lo = a.lo if a.lo >= -1 else -1.0
    cdef double hi = a.hi if a.hi <= 1 else 1.0
    return imk(dn3(asin(lo)), up3(asin(hi)))

cdef inline ivl iatanh(ivl a):
    global _err
    if a.lo <= -1.0 or a.hi >= 1.0:
        _err = 1
        return imk(-INFINITY, INFINITY)
    return imk(dn3(atanh(a.lo)), up3(atanh(a.hi)))

cdef inline ivl iasinh_pos(ivl a):
    # asinh via log(x + sqrt(x^2+1)); monotone
    return ilog(iadd(a, isqrt(iadd(isqr(a), ipoint(1.0)))))

cdef inline ivl iacoth(ivl a):
    return iatanh(idiv(ipoint(1.0), a))

cdef inline ivl ihalfpi():
    return imk(PI_LO / 2, up1(PI_HI / 2))

cdef inline ivl iacot(ivl a):
    # continuous branch with range (0, pi)
    return isub(ihalfpi(), iatan(a))

cdef inline ivl ihull(ivl a, ivl b):
    return imk(a.lo if a.lo < b.lo else b.lo, a.hi if a.hi > b.hi else b.hi)

cdef ivl isin(ivl a):
    if a.hi - a.lo >= PI_LO:
        return imk(-1.0, 1.0)
    cdef ivl slo = imk(dn3(sin(a.lo)), up3(sin(a.lo)))
    cdef ivl shi = imk(dn3(sin(a.hi)), up3(sin(a.hi)))
    cdef ivl clo = imk(dn3(cos(a.lo)), up3(cos(a.lo)))
    cdef ivl chi = imk(dn3(cos(a.hi)), up3(cos(a.hi)))
    cdef double lo = slo.lo if slo.lo < shi.lo else shi.lo
    cdef double hi = slo.hi if slo.hi > shi.hi else shi.hi
    if clo.lo > 0 and chi.lo > 0:
        return imk(slo.lo, shi.hi)
    if clo.hi < 0 and chi.hi < 0:
        return imk(shi.lo, slo.hi)
    if clo.lo > 0 and chi.hi < 0:
        return imk(lo, 1.0)
    if clo.hi < 0 and chi.lo > 0:
        return imk(-1.0, hi)
    if hi >= 0.999:
        hi = 1.0
    if lo <= -0.999:
        lo = -1.0
    return imk(lo, hi)

cdef ivl icos(ivl a):
    if a.hi - a.lo >= PI_LO:
        return imk(-1.0, 1.0)
    cdef ivl clo = imk(dn3(cos(a.lo)), up3(cos(a.lo)))
    cdef ivl chi = imk(dn3(cos(a.hi)), up3(cos(a.hi)))
    cdef ivl slo = imk(dn3(sin(a.lo)), up3(sin(a.lo)))
    cdef ivl shi = imk(dn3(sin(a.hi)), up3(sin(a.hi)))
    cdef double lo = clo.lo if clo.lo < chi.lo else chi.lo
    cdef double hi = clo.hi if clo.hi > chi.hi else chi.hi
    if slo.lo > 0 and shi.lo > 0:
        return imk(chi.lo, clo.hi)
    if slo.hi < 0 and shi.hi < 0:
        return imk(clo.lo, chi.hi)
    if slo.hi < 0 and shi.lo > 0:
        return imk(lo, 1.0)
    if slo.lo > 0 and shi.hi < 0:
        return imk(-1.0, hi)
    if hi >= 0.999:
        hi = 1.0
    if lo <= -0.999:
        lo = -1.0
    return imk(lo, hi)

cdef inline ivl icot(ivl a):
    global _err
    cdef ivl s = isin(a)
    if s.lo <= 0 <= s.hi:
        _err = 1
        return imk(-INFINITY, INFINITY)
    return idiv(icos(a), s)

cdef inline ivl itan_safe(ivl a):
    global _err
    cdef ivl c = icos(a)
    if c.lo <= 0 <= c.hi:
        _err = 1
        return imk(-INFINITY, INFINITY)
    return idiv(isin(a), c)


# ---------------------------------------------------------------------------
# spheres and caps
# ---------------------------------------------------------------------------

def s3_sphere_area(double r):
    cdef ivl out = imul(iscale(IPI, 4.0), isqr(isin(ipoint(r))))
    return out.lo, out.hi

def s3_sphere_volume(double r):
    cdef ivl two_r = ipoint(2.0 * r)  # exact scaling of a point
    cdef ivl out = imul(IPI, isub(two_r, isin(two_r)))
    return out.lo, out.hi

def h3_sphere_area_r(double r):
    cdef ivl out = imul(iscale(IPI, 4.0), isqr(isinh(ipoint(r))))
    return out.lo, out.hi

def h3_sphere_volume_r(double r):
    cdef ivl two_r = ipoint(2.0 * r)
    cdef ivl out = imul(IPI, isub(isinh(two_r), two_r))
    return out.lo, out.hi

def h3_sphere_area_k(double k):
    global _err
    _err = 0
    cdef ivl out = idiv(iscale(IPI, 4.0), isub(isqr(ipoint(k)), ipoint(1.0)))
    if _err:
        raise ValueError("curvature parameter must exceed 1")
    return out.lo, out.hi

def h3_sphere_volume_k(double k):
    global _err
    _err = 0
    cdef ivl ke = ipoint(k)
    cdef ivl km1 = isub(isqr(ke), ipoint(1.0))
    cdef ivl out = imul(IPI, isub(idiv(iscale(ke, 2.0), km1),
                                  iscale(iacoth(ke), 2.0)))
    if _err:
        raise ValueError("curvature parameter must exceed 1")
    return out.lo, out.hi

def s3_cap_area(double r, double phi):
    cdef ivl out = imul(imul(iscale(IPI, 2.0), isqr(isin(ipoint(r)))),
                        isub(ipoint(1.0), icos(ipoint(phi))))
    return out.lo, out.hi

def h3_cap_area(double r, double phi):
    cdef ivl out = imul(imul(iscale(IPI, 2.0), isqr(isinh(ipoint(r)))),
                        isub(ipoint(1.0), icos(ipoint(phi))))
    return out.lo, out.hi

def h3_cap_volume(double r, double phi):
    global _err
    _err = 0
    cdef ivl re = ipoint(r), c = icos(ipoint(phi))
    cdef ivl sc = imul(isinh(re), icosh(re))
    cdef ivl inner = iadd(isub(imul(sc, isub(ipoint(1.0), c)), re),
                          iatanh(imul(itanh(re), c)))
    cdef ivl out = imul(IPI, inner)
    if _err:
        raise ValueError("domain error in h3_cap_volume")
    return out.lo, out.hi


cdef ivl _atan_cosphi_tan_r(ivl cosphi, ivl r, ivl k):
    # atan(cos(phi) tan(r)) for r in (0, pi/2], cotangent form (pole-safe)
    cdef ivl hp = ihalfpi()
    if cosphi.lo > 0:
        return isub(hp, iatan(idiv(k, cosphi)))
    if cosphi.hi < 0:
        return isub(ineg(hp), iatan(idiv(k, cosphi)))
    if r.hi < PI_LO / 2 - 1e-9:
        return iatan(imul(cosphi, itan_safe(r)))
    return imk(-hp.hi, hp.hi)

cdef ivl _s3_cap_volume_principal(ivl r, ivl cosphi, ivl k):
    cdef ivl at = _atan_cosphi_tan_r(cosphi, r, k)
    cdef ivl sc = imul(isin(r), icos(r))
    cdef ivl inner = isub(isub(r, at), imul(sc, isub(ipoint(1.0), cosphi)))
    return imul(IPI, inner)

cdef ivl _principal_atan(ivl c, ivl k):
    # principal atan(cos(phi) tan(r)) through k = cot r (pole-free):
    # s*pi/2 - atan(k/c) with s = sign(c)*sign(k)
    cdef ivl hp = ihalfpi()
    cdef bint c_pos = c.lo > 0, c_neg = c.hi < 0
    cdef bint k_pos = k.lo > 0, k_neg = k.hi < 0
    cdef ivl base
    if (c_pos or c_neg) and (k_pos or k_neg):
        base = iatan(idiv(k, c))
        if c_pos == k_pos:
            return isub(hp, base)
        return isub(ineg(hp), base)
    if k_pos or k_neg:
        return iatan(idiv(c, idiv(ipoint(1.0), k)))
    return imk(-hp.hi, hp.hi)

def s3_cap_volume(double r, double phi):
    global _err
    _err = 0
    cdef ivl re = ipoint(r), c = icos(ipoint(phi))
    cdef ivl at, sc, inner, out, shifted
    cdef double half_pi_f = M_PI / 2  # no double equals the real pi/2
    at = _principal_atan(c, icot(re))
    if r > half_pi_f:
        if c.lo > 0:
            at = iadd(at, IPI)
        elif c.hi < 0:
            at = isub(at, IPI)
        else:
            at = ihull(iadd(at, IPI), isub(at, IPI))
    sc = imul(isin(re), icos(re))
    inner = isub(isub(re, at), imul(sc, isub(ipoint(1.0), c)))
    out = imul(IPI, inner)
    if _err:
        raise ValueError("domain error in s3_cap_volume")
    return out.lo, out.hi


# ---------------------------------------------------------------------------
# S3 double bubbles (cotangent chart)
# ---------------------------------------------------------------------------

cdef inline ivl iabs(ivl a):
    if a.lo >= 0:
        return a
    if a.hi <= 0:
        return imk(-a.hi, -a.lo)
    return imk(0.0, -a.lo if -a.lo > a.hi else a.hi)

cdef int _s3_equal_family(double r, ivl *s_out, ivl *cp_out,
                          ivl *sinx_out, ivl *cosx_out):
    # cancellation-free: |cos phi1| = sqrt(2)|cos r|/sqrt(7 + cos 2r),
    # cos x = 2 |cos phi1| (tight enclosures through r = pi/2)
    cdef ivl re = ipoint(r)
    cdef ivl seven = iadd(ipoint(7.0), icos(ipoint(2.0 * r)))
    cdef ivl s = idiv(isqrt(ipoint(6.0)), isqrt(seven))
    cdef ivl cp = idiv(imul(isqrt(ipoint(2.0)), iabs(icos(re))), isqrt(seven))
    cdef ivl sinx = imul(s, isin(re))
    cdef ivl cosx = iscale(cp, 2.0)
    s_out[0] = s; cp_out[0] = cp; sinx_out[0] = sinx; cosx_out[0] = cosx
    return 0

def s3_equal_volume(double r):
    global _err
    _err = 0
    cdef ivl re = ipoint(r)
    cdef ivl seven = isqrt(iadd(ipoint(7.0), icos(ipoint(2.0 * r))))
    cdef ivl rt2 = isqrt(ipoint(2.0))
    cdef ivl cos_r = icos(re)
    cdef ivl two_r = ipoint(2.0 * r)
    cdef ivl ball = isub(two_r, isin(two_r))
    cdef ivl t1 = imul(iscale(IPI, 0.5),
                       imul(ball, iadd(ipoint(1.0),
                                       idiv(imul(rt2, cos_r), seven))))
    cdef ivl t2 = imul(IPI, isub(iatan(idiv(imul(rt2, isin(re)), seven)),
                                 idiv(imul(imul(rt2, re), cos_r), seven)))
    cdef ivl out = iadd(t1, t2)
    if _err:
        raise ValueError("domain error in s3_equal_volume")
    return out.lo, out.hi

def s3_equal_area(double r):
    global _err
    _err = 0
    cdef ivl s, cp, sinx, cosx, outer, middle, out
    _s3_equal_family(r, &s, &cp, &sinx, &cosx)
    cdef ivl sin2 = isqr(isin(ipoint(r)))
    cdef double hplo = PI_LO / 2, hphi = up1(PI_HI / 2)
    if r <= hplo:
        outer = imul(imul(iscale(IPI, 4.0), sin2), iadd(ipoint(1.0), cp))
        middle = imul(iscale(IPI, 2.0), isub(ipoint(1.0), cosx))
    elif r >= hphi:
        outer = imul(imul(iscale(IPI, 4.0), sin2), isub(ipoint(1.0), cp))
        middle = imul(iscale(IPI, 2.0), iadd(ipoint(1.0), cosx))
    else:
        out = ihull(
            iadd(imul(imul(iscale(IPI, 4.0), sin2), iadd(ipoint(1.0), cp)),
                 imul(iscale(IPI, 2.0), isub(ipoint(1.0), cosx))),
            iadd(imul(imul(iscale(IPI, 4.0), sin2), isub(ipoint(1.0), cp)),
                 imul(iscale(IPI, 2.0), iadd(ipoint(1.0), cosx))))
        if _err:
            raise ValueError("domain error in s3_equal_area")
        return out.lo, out.hi
    out = iadd(outer, middle)
    if _err:
        raise ValueError("domain error in s3_equal_area")
    return out.lo, out.hi

def s3_sdb(double r1, double r2):
    """Region volumes and area on the chart 0 < r1 <= r2 <= pi/2 (equal radii
    anywhere in (0, pi)); returns (code, (v_lo, v_hi, w_lo, w_hi, a_lo, a_hi)).
    code 0 = ok, 1 = outside the chart / degenerate."""
    global _err
    _err = 0
    cdef double vlo, vhi
    if r1 == r2:
        vlo, vhi = s3_equal_volume(r1)
        alo, ahi = s3_equal_area(r1)
        return 0, (vlo, vhi, vlo, vhi, alo, ahi)
    if not (0 < r1 < r2 <= up1(PI_HI / 2)):
        return 1, None
    cdef ivl r1e = ipoint(r1), r2e = ipoint(r2)
    cdef ivl k1 = icot(r1e), k2 = icot(r2e)
    cdef ivl den = iadd(k1, k2)
    if den.lo <= 0:
        return 1, None
    cdef ivl num = isub(k1, k2)
    cdef ivl ratio = idiv(num, den)
    cdef ivl theta = iatan(imul(isqrt(ipoint(3.0)), ratio))
    cdef ivl c = icos(isub(idiv(IPI, ipoint(6.0)), theta))
    if c.lo <= 0:
        return 1, None
    cdef ivl k3 = isub(k1, k2)
    if k3.lo < 0:
        k3 = imk(0.0, k3.hi)
    cdef ivl sinx = idiv(c, isqrt(iadd(isqr(k1), isqr(c))))
    cdef ivl sin1 = idiv(sinx, isin(r1e))
    cdef ivl sin2 = idiv(sinx, isin(r2e))
    cdef ivl sin3 = imul(sinx, isqrt(iadd(ipoint(1.0), isqr(k3))))
    if sin1.lo > 1 or sin2.lo > 1 or sin3.lo > 1:
        return 1, None
    cdef ivl cos1 = isqrt(isub(ipoint(1.0), isqr(sin1)))
    cdef ivl cos2 = isqrt(isub(ipoint(1.0), isqr(sin2)))
    cdef ivl cos3 = isqrt(isub(ipoint(1.0), isqr(sin3)))
    cdef double third = 1.0 / 3.0
    cdef ivl cos_psi1
    if ratio.hi <= dn1(third):
        cos_psi1 = ineg(cos1)
    elif ratio.lo > up1(third):
        cos_psi1 = cos1
    else:
        cos_psi1 = ihull(ineg(cos1), cos1)
    cdef ivl r3 = iacot(k3)
    cdef ivl cap1 = _s3_cap_volume_principal(r1e, cos_psi1, k1)
    cdef ivl cap2 = _s3_cap_volume_principal(r2e, ineg(cos2), k2)
    cdef ivl cap3 = _s3_cap_volume_principal(r3, cos3, k3)
    cdef ivl v = iadd(cap1, cap3)
    cdef ivl w = isub(cap2, cap3)
    cdef ivl tp = iscale(IPI, 2.0)
    cdef ivl area = iadd(
        iadd(imul(imul(tp, isqr(isin(r1e))), isub(ipoint(1.0), cos_psi1)),
             imul(imul(tp, isqr(isin(r2e))), iadd(ipoint(1.0), cos2))),
        imul(imul(tp, isqr(isin(r3))), isub(ipoint(1.0), cos3)))
    if _err:
        return 1, None
    return 0, (v.lo, v.hi, w.lo, w.hi, area.lo, area.hi)


# ---------------------------------------------------------------------------
# H3 double bubbles (curvature chart, k1 >= k2 > 1)
# ---------------------------------------------------------------------------

def h3_sdb(double k1, double k2):
    """(code, 20 doubles): v, w, area, a1, a2, a3, vc1, vc2, vc3, cosh_y as
    (lo, hi) pairs.  code 1 = domain, code 2 = horosphere boundary."""
    global _err
    _err = 0
    if not (k2 > 1.0 and k1 >= k2):
        return 1, None
    cdef bint equal = k1 == k2
    cdef ivl k1e = ipoint(k1), k2e = ipoint(k2)
    cdef ivl theta, ratio
    if equal:
        theta = ipoint(0.0)
        ratio = ipoint(0.0)
    else:
        ratio = idiv(isub(k1e, k2e), iadd(k1e, k2e))
        theta = iatan(imul(isqrt(ipoint(3.0)), ratio))
    cdef ivl c = icos(isub(idiv(IPI, ipoint(6.0)), theta))
    cdef ivl c2 = isqr(c)
    cdef ivl den2 = isub(isqr(k1e), c2)
    if den2.lo <= 0:
        return 1, None
    cdef ivl k3 = isub(k1e, k2e)
    if not equal and k3.lo < 0:
        k3 = imk(0.0, k3.hi)
    cdef ivl q1 = imul(k1e, isqrt(idiv(isub(ipoint(1.0), c2), den2)))
    cdef ivl q2 = isqrt(idiv(isub(isqr(k1e), imul(isqr(k2e), c2)), den2))
    cdef ivl q3 = isqrt(idiv(isub(isqr(k1e), imul(isqr(k3), c2)), den2))
    cdef ivl cosh_y = idiv(k1e, isqrt(den2))
    cdef ivl d1 = isub(isqr(k1e), ipoint(1.0))
    cdef ivl d2 = isub(isqr(k2e), ipoint(1.0))
    cdef ivl tp = iscale(IPI, 2.0)
    cdef double third = 1.0 / 3.0
    cdef int close_branch  # 1 close, 0 far, -1 straddle
    if ratio.hi < dn1(third):
        close_branch = 1
    elif ratio.lo > up1(third):
        close_branch = 0
    else:
        close_branch = -1

    cdef ivl a1, a1f
    if close_branch == 1:
        a1 = idiv(imul(tp, iadd(ipoint(1.0), q1)), d1)
    elif close_branch == 0:
        a1 = idiv(imul(tp, isub(ipoint(1.0), q1)), d1)
    else:
        a1 = ihull(idiv(imul(tp, iadd(ipoint(1.0), q1)), d1),
                   idiv(imul(tp, isub(ipoint(1.0), q1)), d1))
    cdef ivl a2 = idiv(imul(tp, iadd(ipoint(1.0), q2)), d2)
    cdef ivl d3 = isub(isqr(k3), ipoint(1.0))
    if d3.lo <= 0 <= d3.hi:
        return 2, None
    cdef ivl a3 = idiv(imul(tp, isub(ipoint(1.0), q3)), d3)

    cdef ivl vc1, vc1f
    if close_branch != 0:
        vc1 = imul(IPI, iadd(isub(ineg(iacoth(k1e)), iatanh(idiv(q1, k1e))),
                             idiv(imul(k1e, iadd(ipoint(1.0), q1)), d1)))
    if close_branch != 1:
        vc1f = imul(IPI, iadd(iadd(ineg(iacoth(k1e)), iatanh(idiv(q1, k1e))),
                              idiv(imul(k1e, isub(ipoint(1.0), q1)), d1)))
        vc1 = vc1f if close_branch == 0 else ihull(vc1, vc1f)
    cdef ivl vc2 = imul(IPI, isub(isub(
        idiv(imul(k2e, iadd(ipoint(1.0), q2)), d2), iacoth(k2e)),
        iatanh(idiv(q2, k2e))))
    cdef ivl vc3, head, tail
    if equal:
        vc3 = ipoint(0.0)
    else:
        tail = idiv(imul(k3, isub(ipoint(1.0), q3)), d3)
        if d3.hi < 0:
            if k3.lo <= 0:
                vc3 = imk(tail.lo if tail.lo < 0 else 0.0,
                          tail.hi if tail.hi > 0 else 0.0)
            else:
                head = isub(iatanh(idiv(k3, q3)), iatanh(k3))
                vc3 = imul(IPI, iadd(head, tail))
        else:
            head = isub(iatanh(idiv(q3, k3)), iacoth(k3))
            vc3 = imul(IPI, iadd(head, tail))
    cdef ivl v, w
    if equal:
        v = vc1; w = vc2
    else:
        v = iadd(vc1, vc3)
        w = isub(vc2, vc3)
    cdef ivl area = iadd(iadd(a1, a2), a3)
    if _err:
        return 1, None
    return 0, (v.lo, v.hi, w.lo, w.hi, area.lo, area.hi,
               a1.lo, a1.hi, a2.lo, a2.hi, a3.lo, a3.hi,
               vc1.lo, vc1.hi, vc2.lo, vc2.hi, vc3.lo, vc3.hi,
               cosh_y.lo, cosh_y.hi)
