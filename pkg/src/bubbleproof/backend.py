"""Backend selection: compiled double-precision interval kernels when
available (and sufficient for the requested precision), pure-Python MPFR
enclosures otherwise.

Both backends expose the same composite-kernel surface and both satisfy the
containment contract; the compiled kernel pads every libm call by a few ulps
outward, the MPFR backend relies on correct rounding.  `force_python_backend`
(or the BUBBLE_PURE_PYTHON=1 environment variable) pins the fallback.
"""

from __future__ import annotations

import os
from functools import lru_cache

from .enclosure import DEFAULT_PRECISION, Enclosure, get_context
from .errors import DegenerateConfig, DomainError
from . import _pygeom

try:  # compiled kernel is optional
    from . import _kernel as _ck
    HAVE_KERNEL = True
except ImportError:  # pragma: no cover - build-environment dependent
    _ck = None
    HAVE_KERNEL = False

_FORCE_PY = os.environ.get("BUBBLE_PURE_PYTHON", "") not in ("", "0")


def force_python_backend(flag: bool = True):
    global _FORCE_PY
    _FORCE_PY = flag
    get_backend.cache_clear()


class PyBackend:
    """MPFR-backed composite kernels at a configurable precision."""

    name = "python-mpfr"

    def __init__(self, precision_bits: int = DEFAULT_PRECISION):
        self.precision_bits = precision_bits
        self._ctx = get_context(precision_bits)

    def __getattr__(self, item):
        fn = getattr(_pygeom, item)
        ctx = self._ctx

        def call(*args):
            return fn(ctx, *args)

        return call


class KernelBackend:
    """Compiled double-interval kernels (53-bit working precision)."""

    name = "compiled-double"
    precision_bits = 53

    @staticmethod
    def _enc(pair):
        return Enclosure(pair[0], pair[1])

    def s3_sphere_area(self, r):
        return self._enc(_ck.s3_sphere_area(float(r)))

    def s3_sphere_volume(self, r):
        return self._enc(_ck.s3_sphere_volume(float(r)))

    def h3_sphere_area_r(self, r):
        return self._enc(_ck.h3_sphere_area_r(float(r)))

    def h3_sphere_volume_r(self, r):
        return self._enc(_ck.h3_sphere_volume_r(float(r)))

    def h3_sphere_area_k(self, k):
        return self._enc(_ck.h3_sphere_area_k(float(k)))

    def h3_sphere_volume_k(self, k):
        return self._enc(_ck.h3_sphere_volume_k(float(k)))

    def s3_cap_area(self, r, phi):
        return self._enc(_ck.s3_cap_area(float(r), float(phi)))

    def s3_cap_volume(self, r, phi):
        return self._enc(_ck.s3_cap_volume(float(r), float(phi)))

    def h3_cap_area(self, r, phi):
        return self._enc(_ck.h3_cap_area(float(r), float(phi)))

    def h3_cap_volume(self, r, phi):
        return self._enc(_ck.h3_cap_volume(float(r), float(phi)))

    def s3_equal_volume(self, r):
        return self._enc(_ck.s3_equal_volume(float(r)))

    def s3_equal_area(self, r):
        return self._enc(_ck.s3_equal_area(float(r)))

    def s3_sdb(self, r1, r2):
        code, v = _ck.s3_sdb(float(r1), float(r2))
        if code != 0:
            raise DegenerateConfig(f"({r1}, {r2}) outside the ordered chart")
        return {"v": Enclosure(v[0], v[1]), "w": Enclosure(v[2], v[3]),
                "area": Enclosure(v[4], v[5])}

    def s3_exterior_from_complements(self, r1, r2):
        # consistency oracle only; route through the reference backend
        return PyBackend().s3_exterior_from_complements(r1, r2)

    def s3_generating(self, r1, r2):
        return PyBackend().s3_generating(r1, r2)

    def h3_chain(self, k1, k2):
        return PyBackend().h3_chain(k1, k2)

    def h3_cap_areas(self, k1, k2):
        d = self.h3_sdb(k1, k2)
        return (d["a1"], d["a2"], d["a3"]), d

    def h3_cap_volumes(self, k1, k2):
        d = self.h3_sdb(k1, k2)
        return (d["vc1"], d["vc2"], d["vc3"]), d

    def h3_sdb(self, k1, k2):
        code, v = _ck.h3_sdb(float(k1), float(k2))
        if code == 1:
            raise DomainError("curvature parameters must exceed 1 with k1 >= k2")
        if code == 2:
            raise DomainError("separating-cap curvature parameter at the "
                              "horosphere boundary |k1 - k2| = 1")
        keys = ("v", "w", "area", "a1", "a2", "a3", "vc1", "vc2", "vc3", "cosh_y")
        out = {k: Enclosure(v[2 * i], v[2 * i + 1]) for i, k in enumerate(keys)}
        out["equal"] = k1 == k2
        return out


@lru_cache(maxsize=4)
def get_backend(precision_bits: int = DEFAULT_PRECISION):
    if HAVE_KERNEL and not _FORCE_PY and precision_bits <= 53:
        return KernelBackend()
    return PyBackend(precision_bits)


def backend_name(precision_bits: int = DEFAULT_PRECISION) -> str:
    return get_backend(precision_bits).name
