"""Certified interval arithmetic with outward rounding.

Every rigorous bound in the package is built from `Enclosure` values: closed
intervals [lo, hi] guaranteed to contain the exact real result.  Endpoints are
MPFR floats computed with directed rounding (RoundDown for lo, RoundUp for
hi), so the containment guarantee is unconditional for arithmetic and relies
on MPFR's correctly-rounded transcendentals otherwise.

The working precision is configurable (>= 53 bits).  A fixed extra slack
`delta` (default 2**-24) is layered on top of enclosures by the bound layers,
matching the error margins used by the original verification runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import gmpy2
from gmpy2 import mpfr

from .errors import DomainError

DEFAULT_DELTA = 2.0 ** -24
DEFAULT_PRECISION = 53


@dataclass(frozen=True)
class SlackConfig:
    """Global slack applied on top of enclosure endpoints.

    delta: additive padding in the style of the original runs (2**-24).
    precision_bits: MPFR working precision for the pure-Python backend.
    """

    delta: float = DEFAULT_DELTA
    precision_bits: int = DEFAULT_PRECISION

    def __post_init__(self):
        if not self.delta > 0:
            raise ValueError("delta must be positive")
        if self.precision_bits < 53:
            raise ValueError("precision_bits must be >= 53")


class Enclosure:
    """A closed interval certified to contain one exact real value."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        if not lo <= hi:
            raise ValueError(f"invalid enclosure [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, *a):
        raise AttributeError("Enclosure is immutable")

    def __repr__(self):
        return f"Enclosure({self.lo!r}, {self.hi!r})"

    def __contains__(self, x):
        return self.lo <= x <= self.hi

    @property
    def width(self):
        return float(self.hi) - float(self.lo)

    @property
    def mid(self):
        return (float(self.lo) + float(self.hi)) / 2.0

    def strictly_above(self, x) -> bool:
        return self.lo > x

    def strictly_below(self, x) -> bool:
        return self.hi < x

    def subset_of(self, lo, hi) -> bool:
        return self.lo >= lo and self.hi <= hi


_PAD_DN = gmpy2.context(precision=53, round=gmpy2.RoundDown)
_PAD_UP = gmpy2.context(precision=53, round=gmpy2.RoundUp)


def pad_lower(x: Enclosure, delta) -> float:
    """Certified lower bound: x.lo - delta, rounded toward -inf to a double."""
    if delta < 0:
        raise ValueError("delta must be >= 0")
    return float(_PAD_DN.sub(_PAD_DN.add(mpfr(0), x.lo), mpfr(delta, 53)))


def pad_upper(x: Enclosure, delta) -> float:
    """Certified upper bound: x.hi + delta, rounded toward +inf to a double."""
    if delta < 0:
        raise ValueError("delta must be >= 0")
    return float(_PAD_UP.add(_PAD_UP.add(mpfr(0), x.hi), mpfr(delta, 53)))


class EncContext:
    """Interval operation set at a fixed MPFR precision.

    All methods take and return `Enclosure` values; scalars are converted
    exactly.  Transcendental endpoints use MPFR's correct rounding, so each
    operation adds at most one outward-rounding step per endpoint.
    """

    def __init__(self, precision_bits: int = DEFAULT_PRECISION):
        if precision_bits < 53:
            raise ValueError("precision_bits must be >= 53")
        self.precision = precision_bits
        self._dn = gmpy2.context(precision=precision_bits, round=gmpy2.RoundDown)
        self._up = gmpy2.context(precision=precision_bits, round=gmpy2.RoundUp)
        self._pi = Enclosure(self._dn.const_pi(), self._up.const_pi())

    # -- conversions ---------------------------------------------------

    def enc(self, x) -> Enclosure:
        """Exact conversion of a point value (float, int, Fraction, mpfr)."""
        if isinstance(x, Enclosure):
            return x
        if isinstance(x, Fraction):
            q = gmpy2.mpq(x.numerator, x.denominator)
            return Enclosure(self._dn.add(mpfr(0), q), self._up.add(mpfr(0), q))
        v = mpfr(x, self.precision)
        return Enclosure(v, v)

    def interval(self, lo, hi) -> Enclosure:
        return Enclosure(mpfr(lo, self.precision), mpfr(hi, self.precision))

    def pi(self) -> Enclosure:
        return self._pi

    # -- arithmetic ----------------------------------------------------

    def add(self, a, b) -> Enclosure:
        a, b = self.enc(a), self.enc(b)
        return Enclosure(self._dn.add(a.lo, b.lo), self._up.add(a.hi, b.hi))

    def sub(self, a, b) -> Enclosure:
        a, b = self.enc(a), self.enc(b)
        return Enclosure(self._dn.sub(a.lo, b.hi), self._up.sub(a.hi, b.lo))

    def neg(self, a) -> Enclosure:
        a = self.enc(a)
        return Enclosure(-a.hi, -a.lo)

    def mul(self, a, b) -> Enclosure:
        a, b = self.enc(a), self.enc(b)
        lo = min(self._dn.mul(a.lo, b.lo), self._dn.mul(a.lo, b.hi),
                 self._dn.mul(a.hi, b.lo), self._dn.mul(a.hi, b.hi))
        hi = max(self._up.mul(a.lo, b.lo), self._up.mul(a.lo, b.hi),
                 self._up.mul(a.hi, b.lo), self._up.mul(a.hi, b.hi))
        return Enclosure(lo, hi)

    def div(self, a, b) -> Enclosure:
        a, b = self.enc(a), self.enc(b)
        if b.lo <= 0 <= b.hi:
            raise DomainError("division by an enclosure containing zero")
        lo = min(self._dn.div(a.lo, b.lo), self._dn.div(a.lo, b.hi),
                 self._dn.div(a.hi, b.lo), self._dn.div(a.hi, b.hi))
        hi = max(self._up.div(a.lo, b.lo), self._up.div(a.lo, b.hi),
                 self._up.div(a.hi, b.lo), self._up.div(a.hi, b.hi))
        return Enclosure(lo, hi)

    def sqr(self, a) -> Enclosure:
        a = self.enc(a)
        if a.lo >= 0:
            return Enclosure(self._dn.mul(a.lo, a.lo), self._up.mul(a.hi, a.hi))
        if a.hi <= 0:
            return Enclosure(self._dn.mul(a.hi, a.hi), self._up.mul(a.lo, a.lo))
        return Enclosure(mpfr(0),
                         max(self._up.mul(a.lo, a.lo), self._up.mul(a.hi, a.hi)))

    def sqrt(self, a) -> Enclosure:
        a = self.enc(a)
        if a.hi < 0:
            raise DomainError("sqrt of a negative enclosure")
        lo = a.lo if a.lo > 0 else mpfr(0)
        return Enclosure(self._dn.sqrt(lo), self._up.sqrt(a.hi))

    # -- monotone elementary functions ----------------------------------

    def exp(self, a) -> Enclosure:
        a = self.enc(a)
        return Enclosure(self._dn.exp(a.lo), self._up.exp(a.hi))

    def log(self, a) -> Enclosure:
        a = self.enc(a)
        if a.lo <= 0:
            raise DomainError("log of a non-positive enclosure")
        return Enclosure(self._dn.log(a.lo), self._up.log(a.hi))

    def sinh(self, a) -> Enclosure:
        a = self.enc(a)
        return Enclosure(self._dn.sinh(a.lo), self._up.sinh(a.hi))

    def cosh(self, a) -> Enclosure:
        a = self.enc(a)
        if a.lo >= 0:
            return Enclosure(self._dn.cosh(a.lo), self._up.cosh(a.hi))
        if a.hi <= 0:
            return Enclosure(self._dn.cosh(a.hi), self._up.cosh(a.lo))
        return Enclosure(mpfr(1), max(self._up.cosh(a.lo), self._up.cosh(a.hi)))

    def tanh(self, a) -> Enclosure:
        a = self.enc(a)
        return Enclosure(self._dn.tanh(a.lo), self._up.tanh(a.hi))

    def asin(self, a) -> Enclosure:
        a = self.enc(a)
        if a.lo > 1 or a.hi < -1:
            raise DomainError("asin argument outside [-1, 1]")
        lo = a.lo if a.lo >= -1 else mpfr(-1)
        hi = a.hi if a.hi <= 1 else mpfr(1)
        return Enclosure(self._dn.asin(lo), self._up.asin(hi))

    def atan(self, a) -> Enclosure:
        a = self.enc(a)
        return Enclosure(self._dn.atan(a.lo), self._up.atan(a.hi))

    def acot(self, a) -> Enclosure:
        """Continuous inverse cotangent with range (0, pi)."""
        a = self.enc(a)
        at = self.atan(a)
        half_pi = Enclosure(self._dn.div(self._pi.lo, mpfr(2)),
                            self._up.div(self._pi.hi, mpfr(2)))
        return self.sub(half_pi, at)

    def atanh(self, a) -> Enclosure:
        a = self.enc(a)
        if a.lo <= -1 or a.hi >= 1:
            raise DomainError("atanh argument outside (-1, 1)")
        return Enclosure(self._dn.atanh(a.lo), self._up.atanh(a.hi))

    def acoth(self, a) -> Enclosure:
        """Inverse hyperbolic cotangent, |x| > 1 (atanh(1/x))."""
        a = self.enc(a)
        if a.lo <= 1 and a.hi >= -1:
            if not (a.lo > 1 or a.hi < -1):
                raise DomainError("acoth argument inside [-1, 1]")
        return self.atanh(self.div(self.enc(1), a))

    def asinh(self, a) -> Enclosure:
        a = self.enc(a)
        return Enclosure(self._dn.asinh(a.lo), self._up.asinh(a.hi))

    def acosh(self, a) -> Enclosure:
        a = self.enc(a)
        if a.hi < 1:
            raise DomainError("acosh argument below 1")
        lo = a.lo if a.lo >= 1 else mpfr(1)
        return Enclosure(self._dn.acosh(lo), self._up.acosh(a.hi))

    # -- circular functions with critical-point handling ----------------

    def sin(self, a) -> Enclosure:
        a = self.enc(a)
        if self._up.sub(a.hi, a.lo) >= self._pi.lo:
            return Enclosure(mpfr(-1), mpfr(1))
        slo = Enclosure(self._dn.sin(a.lo), self._up.sin(a.lo))
        shi = Enclosure(self._dn.sin(a.hi), self._up.sin(a.hi))
        clo = Enclosure(self._dn.cos(a.lo), self._up.cos(a.lo))
        chi = Enclosure(self._dn.cos(a.hi), self._up.cos(a.hi))
        lo = min(slo.lo, shi.lo)
        hi = max(slo.hi, shi.hi)
        if clo.lo > 0 and chi.lo > 0:
            return Enclosure(slo.lo, shi.hi)
        if clo.hi < 0 and chi.hi < 0:
            return Enclosure(shi.lo, slo.hi)
        if clo.lo > 0 and chi.hi < 0:
            return Enclosure(lo, mpfr(1))
        if clo.hi < 0 and chi.lo > 0:
            return Enclosure(mpfr(-1), hi)
        # an endpoint sits at a critical point within rounding accuracy;
        # |sin| is then within rounding of 1 and the extremum side is known
        if hi >= 0.999:
            hi = mpfr(1)
        if lo <= -0.999:
            lo = mpfr(-1)
        return Enclosure(lo, hi)

    def cos(self, a) -> Enclosure:
        a = self.enc(a)
        if self._up.sub(a.hi, a.lo) >= self._pi.lo:
            return Enclosure(mpfr(-1), mpfr(1))
        clo = Enclosure(self._dn.cos(a.lo), self._up.cos(a.lo))
        chi = Enclosure(self._dn.cos(a.hi), self._up.cos(a.hi))
        slo = Enclosure(self._dn.sin(a.lo), self._up.sin(a.lo))
        shi = Enclosure(self._dn.sin(a.hi), self._up.sin(a.hi))
        lo = min(clo.lo, chi.lo)
        hi = max(clo.hi, chi.hi)
        # cos' = -sin: decreasing where sin > 0
        if slo.lo > 0 and shi.lo > 0:
            return Enclosure(chi.lo, clo.hi)
        if slo.hi < 0 and shi.hi < 0:
            return Enclosure(clo.lo, chi.hi)
        if slo.hi < 0 and shi.lo > 0:
            return Enclosure(lo, mpfr(1))
        if slo.lo > 0 and shi.hi < 0:
            return Enclosure(mpfr(-1), hi)
        if hi >= 0.999:
            hi = mpfr(1)
        if lo <= -0.999:
            lo = mpfr(-1)
        return Enclosure(lo, hi)

    def tan(self, a) -> Enclosure:
        a = self.enc(a)
        c = self.cos(a)
        if c.lo <= 0 <= c.hi:
            raise DomainError("tan over an interval containing a pole")
        return self.div(self.sin(a), c)

    def cot(self, a) -> Enclosure:
        s = self.sin(a)
        if s.lo <= 0 <= s.hi:
            raise DomainError("cot over an interval containing a pole")
        return self.div(self.cos(a), s)


@lru_cache(maxsize=8)
def get_context(precision_bits: int = DEFAULT_PRECISION) -> EncContext:
    return EncContext(precision_bits)


def enclose_eval(fn, *args, precision_bits: int = DEFAULT_PRECISION) -> Enclosure:
    """Evaluate `fn(ctx, *enclosures)` over exact enclosures of the arguments.

    `fn` receives the interval context followed by one Enclosure per argument
    and must compose only EncContext operations, so the containment invariant
    is inherited from the primitive operations.
    """
    ctx = get_context(precision_bits)
    return fn(ctx, *[ctx.enc(a) for a in args])
