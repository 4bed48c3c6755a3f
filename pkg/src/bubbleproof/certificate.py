"""Certificate serialization and independent re-verification.

Certificates are JSON with every bound endpoint stored as an exact decimal
string (the padded values are dyadic, so the decimals are finite and the
file is byte-identical across runs and parallelism).  `verify_certificate`
re-checks every leaf inequality and the exact tiling of each split from the
stored strings alone.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import CertificateError

KNOWN_REDUCTIONS = {"hutchings_balancing", "s_balancing", "permutation"}


def exact_decimal(x) -> str:
    """Finite exact decimal representation of a dyadic number."""
    q = (Fraction(x) if isinstance(x, (int, float, Fraction))
         else Fraction(*x.as_integer_ratio()))
    num, den = q.numerator, q.denominator
    k = den.bit_length() - 1
    if den != 1 << k:
        raise CertificateError(f"{x!r} is not dyadic")
    scaled = num * 5 ** k  # num / 2^k == scaled / 10^k
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(k + 1, "0")
    if k == 0:
        return sign + digits
    whole, frac = digits[:-k], digits[-k:]
    frac = frac.rstrip("0")
    return sign + whole + ("." + frac if frac else "")


def _encode(obj):
    if isinstance(obj, float):
        return exact_decimal(obj)
    if isinstance(obj, dict):
        return {k: _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    return obj


def certificate_bytes(cert: dict) -> bytes:
    return json.dumps(_encode(cert), sort_keys=True,
                      separators=(",", ":")).encode() + b"\n"


def write_certificate(cert: dict, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(certificate_bytes(cert))
    return path


def load_certificate(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CertificateError(f"unreadable certificate: {exc}") from exc


def _frac(s, where):
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise CertificateError(f"bad number {s!r} at {where}") from exc


def _check_rect_split(node, children, where, errors):
    r = node["region"]
    v_lo, w_lo = _frac(r["v_lo"], where), _frac(r["w_lo"], where)
    v_hi, w_hi = _frac(r["v_hi"], where), _frac(r["w_hi"], where)
    vm, wm = (v_lo + v_hi) / 2, (w_lo + w_hi) / 2
    want = {
        (v_lo, w_lo, vm, wm), (vm, w_lo, v_hi, wm),
        (v_lo, wm, vm, w_hi), (vm, wm, v_hi, w_hi),
    }
    got = set()
    for c in children:
        cr = c["region"]
        if cr.get("kind") != "rect":
            errors.append(f"{where}: split4 child is not a rect")
            return
        got.add((_frac(cr["v_lo"], where), _frac(cr["w_lo"], where),
                 _frac(cr["v_hi"], where), _frac(cr["w_hi"], where)))
    if got != want:
        errors.append(f"{where}: split4 children do not tile the parent")


def _check_tri_split(node, children, where, errors):
    r = node["region"]
    x1, y1 = _frac(r["x1"], where), _frac(r["y1"], where)
    x3, y3 = _frac(r["x3"], where), _frac(r["y3"], where)
    x2, y2 = (x1 + x3) / 2, (y1 + y3) / 2
    kinds = [c["region"].get("kind") for c in children]
    if sorted(kinds) != ["rect", "triangle", "triangle"]:
        errors.append(f"{where}: split3 needs one rect and two triangles")
        return
    ok = True
    for c in children:
        cr = c["region"]
        if cr["kind"] == "rect":
            ok &= (_frac(cr["v_lo"], where), _frac(cr["w_lo"], where),
                   _frac(cr["v_hi"], where), _frac(cr["w_hi"], where)) == \
                  (x1, y1, x2, y2)
        else:
            tri = (_frac(cr["x1"], where), _frac(cr["y1"], where),
                   _frac(cr["x3"], where), _frac(cr["y3"], where))
            ok &= tri in {(x1, y2, x2, y3), (x2, y1, x3, y2)}
    if not ok:
        errors.append(f"{where}: split3 children do not tile the parent")


def _verify_node(node, where, errors):
    outcome = node.get("outcome")
    method = node.get("method")
    children = node.get("children", [])
    if outcome not in ("proved", "failed"):
        errors.append(f"{where}: bad outcome {outcome!r}")
        return
    if outcome == "failed":
        return  # failures are reported, never trusted
    if method == "direct_hit":
        if node.get("note") == "zero-measure triangle":
            return
        if "g_min" not in node or "h_max" not in node:
            errors.append(f"{where}: direct hit without stored bounds")
            return
        if not _frac(node["g_min"], where) > _frac(node["h_max"], where):
            errors.append(f"{where}: direct hit fails g_min > h_max")
    elif method == "reduction":
        if node.get("reduction") not in KNOWN_REDUCTIONS:
            errors.append(f"{where}: unknown reduction {node.get('reduction')}")
    elif method == "split4":
        if len(children) != 4:
            errors.append(f"{where}: split4 must have 4 children")
        else:
            _check_rect_split(node, children, where, errors)
    elif method == "split3":
        if len(children) != 3:
            errors.append(f"{where}: split3 must have 3 children")
        else:
            _check_tri_split(node, children, where, errors)
    elif method == "sweep_band":
        prev = None
        step = _frac(node["region"]["rect_h"], where)
        for i, row in enumerate(children):
            rw = _frac(row["w"], where)
            if prev is not None and rw - prev != step:
                errors.append(f"{where}: row {i} does not advance by rect_h")
            prev = rw
            if row.get("outcome") == "proved":
                if not _frac(row["g_min"], where) > _frac(row["h_max"], where):
                    errors.append(f"{where}: row {i} fails g_min > h_max")
    elif method == "composite":
        pass
    else:
        errors.append(f"{where}: unknown method {method!r}")
    if method in ("split4", "split3", "composite", "sweep_band"):
        bad = [i for i, c in enumerate(children)
               if c.get("outcome") != "proved"]
        if bad:
            errors.append(f"{where}: proved node has failed children {bad}")
    if method in ("split4", "split3", "composite"):
        for i, c in enumerate(children):
            _verify_node(c, f"{where}/{i}", errors)


def verify_certificate(cert_or_path) -> list[str]:
    """Re-check a certificate from its stored endpoints; returns the list of
    violations (empty means the certificate is internally sound)."""
    cert = (load_certificate(cert_or_path)
            if not isinstance(cert_or_path, dict) else cert_or_path)
    errors: list[str] = []
    for key in ("engine_version", "space", "slack", "outcome", "tree"):
        if key not in cert:
            errors.append(f"missing field {key}")
    if errors:
        return errors
    tree = cert["tree"]
    if cert["outcome"] != tree.get("outcome"):
        errors.append("top-level outcome disagrees with the tree")
    _verify_node(tree, "tree", errors)
    return errors
