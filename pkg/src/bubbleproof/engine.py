"""Branch-and-bound positivity certifiers and theorem orchestration.

S3: rectangle quadrisection and triangle trisection over exact rational
coordinates (fractions of |S3|), with the skip / hit rules of the original
runs.  H3: banded rectangle sweeps driven by a tracked curvature pair, one
parameterized claim per band, with a ray-restricted mode.  Every certificate
leaf stores the padded bound endpoints it compared, so an independent pass
can re-check each inequality.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import fastmath as fm
from .backend import backend_name, get_backend
from .bounds import (Rect, SweepAreaTable, g_lower_point,
                     h_upper_s3_corner)
from .enclosure import SlackConfig, pad_upper
from .errors import (CurvatureUnderflow, DegenerateConfig, DomainError,
                     InfeasibleBand, NoConvergence, RegionViolation,
                     StepFailure, Uncovered)
from .geometry import SpaceTag
from .solvers import StepperState, StepWindow, curvature_pair_step

ENGINE_VERSION = "bubbleproof-1"
DEPTH_BUDGET_DEFAULT = 30
RAY_RATIO = Fraction(17, 20)  # v = 0.85 w


@dataclass(frozen=True)
class Triangle:
    """Right triangle with legs at the corner (x1, y1) and tips (x1, y3),
    (x3, y1); the hypotenuse must lie on the line v + 2w = |S3|."""

    x1: Fraction
    y1: Fraction
    x3: Fraction
    y3: Fraction

    def __post_init__(self):
        if self.x1 + 2 * self.y3 != 1 or self.x3 + 2 * self.y1 != 1:
            raise DomainError("triangle hypotenuse must lie on v + 2w = |S3|")


@dataclass(frozen=True)
class RegionClaim:
    """One parameterized banded sweep: the band wMin <= w <= wMax tiled by
    rect_h x rect_w boxes starting at vMin, with tracked starting curvatures
    and probe factors."""

    name: str
    v_min: Fraction
    w_min: Fraction
    w_max: Fraction
    rect_h: Fraction
    rect_w: Fraction
    k1_start: float
    k2_start: float
    adj_main: float = 0.9999
    adj_second: float = 0.9995
    ray_only: bool = False

    def __post_init__(self):
        if not (self.w_min < self.w_max and self.rect_h > 0 and self.rect_w > 0):
            raise DomainError("malformed region claim")
        if self.v_min < RAY_RATIO * self.w_min - self.rect_w:
            raise DomainError("claim starts left of the band")


def _fr(s: str) -> Fraction:
    return Fraction(s)


CLAIMS: dict[str, RegionClaim] = {
    "5.9": RegionClaim("5.9", _fr("0.002329"), _fr("0.00274"), _fr("0.01"),
                       _fr("0.00001"), _fr("0.00001"), 11.46, 10.95),
    "5.10": RegionClaim("5.10", _fr("0.0085"), _fr("0.01"), _fr("0.1"),
                        _fr("0.00005"), _fr("0.00005"), 7.475, 7.15),
    "5.11": RegionClaim("5.11", _fr("0.085"), _fr("0.1"), _fr("1"),
                        _fr("0.0005"), _fr("0.0005"), 3.56, 3.415),
    "5.12": RegionClaim("5.12", _fr("0.85"), _fr("1"), _fr("15"),
                        _fr("0.005"), _fr("0.005"), 1.849, 1.787),
    "5.13": RegionClaim("5.13", _fr("12.75"), _fr("15"), _fr("25"),
                        _fr("0.01"), _fr("0.01"), 1.15204, 1.1352),
    "5.14": RegionClaim("5.14", _fr("21.25"), _fr("25"), _fr("45"),
                        _fr("0.02"), _fr("0.02"), 1.1027, 1.09054),
    "5.15": RegionClaim("5.15", _fr("38.25"), _fr("45"), _fr("65"),
                        _fr("0.02"), _fr("0.02"), 1.0637, 1.05562),
    "5.16": RegionClaim("5.16", _fr("55.25"), _fr("65"), _fr("85"),
                        _fr("0.02"), _fr("0.02"), 1.04658, 1.040469),
    "5.17": RegionClaim("5.17", _fr("72.25"), _fr("85"), _fr("110"),
                        _fr("0.015"), _fr("0.015"), 1.03684, 1.031905),
    "5.18": RegionClaim("5.18", _fr("93.5"), _fr("110"), _fr("130"),
                        _fr("0.015"), _fr("0.015"), 1.02927, 1.025276),
    "5.19": RegionClaim("5.19", _fr("110.5"), _fr("130"), _fr("150"),
                        _fr("0.015"), _fr("0.015"), 1.025161, 1.021693),
    "5.20": RegionClaim("5.20", _fr("127.5"), _fr("150"), _fr("300"),
                        _fr("0.01"), _fr("0.01"), 1.022077, 1.019009,
                        ray_only=True),
}

S3_SQUARE = Rect(Fraction(1, 10), Fraction(1, 10), Fraction(1, 3), Fraction(1, 3))
S3_TRIANGLE = Triangle(Fraction(1, 10), Fraction(1, 3),
                       Fraction(1, 3), Fraction(9, 20))


def _region_json(region) -> dict:
    if isinstance(region, Rect):
        return {"kind": "rect", "v_lo": str(region.v_lo), "w_lo": str(region.w_lo),
                "v_hi": str(region.v_hi), "w_hi": str(region.w_hi)}
    if isinstance(region, Triangle):
        return {"kind": "triangle", "x1": str(region.x1), "y1": str(region.y1),
                "x3": str(region.x3), "y3": str(region.y3)}
    return dict(region)


class _S3Prover:
    """Shared state of one S3 recursion run (corner memoization, budget)."""

    def __init__(self, slack: SlackConfig, depth_budget: int):
        self.slack = slack
        self.depth_budget = depth_budget
        self._g_cache: dict = {}
        self._h_cache: dict = {}
        self.leaves = 0

    def g_corner(self, v: Fraction, w: Fraction, eps: float) -> float:
        key = (v, w, eps)
        try:
            return self._g_cache[key]
        except KeyError:
            val = g_lower_point(SpaceTag.S3, v, w, eps, eps, slack=self.slack)
            self._g_cache[key] = val
            return val

    def h_corner(self, v: Fraction, w: Fraction, eps: float) -> float:
        key = (v, w, eps)
        try:
            return self._h_cache[key]
        except KeyError:
            val = h_upper_s3_corner(v, w, eps, slack=self.slack)
            self._h_cache[key] = val
            return val

    # -- rectangle recursion -------------------------------------------

    def rectangle(self, rect: Rect, depth: int = 0) -> dict:
        node = {"region": _region_json(rect), "depth": depth}
        if rect.v_lo > rect.w_hi:
            # v > w everywhere on the tile; covered by balancing reductions
            node.update(method="reduction", reduction="hutchings_balancing",
                        outcome="proved")
            self.leaves += 1
            return node
        if depth >= self.depth_budget:
            node.update(method="direct_hit", outcome="failed",
                        failure="depth budget exceeded")
            return node
        eps = float(rect.v_hi - rect.v_lo) / 2.0
        corners = [(rect.v_lo, rect.w_lo), (rect.v_lo, rect.w_hi),
                   (rect.v_hi, rect.w_lo), (rect.v_hi, rect.w_hi)]
        try:
            g_min = min(self.g_corner(v, w, eps) for v, w in corners)
            h_max = self.h_corner(rect.v_hi, rect.w_hi, eps)
        except (InfeasibleBand, NoConvergence, RegionViolation,
                DegenerateConfig) as exc:
            node.update(method="direct_hit", outcome="failed",
                        failure=f"bound evaluation: {exc}")
            return node
        node.update(g_min=g_min, h_max=h_max)
        if g_min > h_max:
            node.update(method="direct_hit", outcome="proved")
            self.leaves += 1
            return node
        vm = (rect.v_lo + rect.v_hi) / 2
        wm = (rect.w_lo + rect.w_hi) / 2
        children = [
            self.rectangle(Rect(rect.v_lo, rect.w_lo, vm, wm), depth + 1),
            self.rectangle(Rect(vm, rect.w_lo, rect.v_hi, wm), depth + 1),
            self.rectangle(Rect(rect.v_lo, wm, vm, rect.w_hi), depth + 1),
            self.rectangle(Rect(vm, wm, rect.v_hi, rect.w_hi), depth + 1),
        ]
        node.update(method="split4", children=children,
                    outcome="proved" if all(c["outcome"] == "proved"
                                            for c in children) else "failed")
        return node

    # -- triangle recursion --------------------------------------------

    def triangle(self, tri: Triangle, depth: int = 0) -> dict:
        node = {"region": _region_json(tri), "depth": depth}
        if tri.x1 >= tri.x3 or tri.y1 >= tri.y3:
            node.update(method="direct_hit", outcome="proved",
                        note="zero-measure triangle")
            self.leaves += 1
            return node
        if depth >= self.depth_budget:
            node.update(method="direct_hit", outcome="failed",
                        failure="depth budget exceeded")
            return node
        eps = float(tri.x3 - tri.x1) / 2.0
        verts = [(tri.x1, tri.y1), (tri.x1, tri.y3), (tri.x3, tri.y1)]
        try:
            g_min = min(self.g_corner(v, w, eps) for v, w in verts)
            h_max = self.h_corner(tri.x3, tri.y1, eps)
        except (InfeasibleBand, NoConvergence, RegionViolation,
                DegenerateConfig) as exc:
            node.update(method="direct_hit", outcome="failed",
                        failure=f"bound evaluation: {exc}")
            return node
        node.update(g_min=g_min, h_max=h_max)
        if g_min > h_max:
            node.update(method="direct_hit", outcome="proved")
            self.leaves += 1
            return node
        x2 = (tri.x1 + tri.x3) / 2
        y2 = (tri.y1 + tri.y3) / 2
        children = [
            self.rectangle(Rect(tri.x1, tri.y1, x2, y2), depth + 1),
            self.triangle(Triangle(tri.x1, y2, x2, tri.y3), depth + 1),
            self.triangle(Triangle(x2, tri.y1, tri.x3, y2), depth + 1),
        ]
        node.update(method="split3", children=children,
                    outcome="proved" if all(c["outcome"] == "proved"
                                            for c in children) else "failed")
        return node


def verify_rectangle_s3(rect: Rect, depth_budget: int = DEPTH_BUDGET_DEFAULT, *,
                        slack: SlackConfig | None = None) -> dict:
    """Certify F > 0 on a rectangle of normalized volume pairs."""
    slack = slack or SlackConfig()
    prover = _S3Prover(slack, depth_budget)
    tree = prover.rectangle(rect)
    return _wrap_certificate(SpaceTag.S3, tree, slack)


def verify_triangle_s3(tri: Triangle, depth_budget: int = DEPTH_BUDGET_DEFAULT, *,
                       slack: SlackConfig | None = None) -> dict:
    """Certify F > 0 on a triangle with hypotenuse on the w = u line."""
    slack = slack or SlackConfig()
    prover = _S3Prover(slack, depth_budget)
    tree = prover.triangle(tri)
    return _wrap_certificate(SpaceTag.S3, tree, slack)


def _wrap_certificate(space: SpaceTag, tree: dict, slack: SlackConfig,
                      extra: dict | None = None) -> dict:
    cert = {
        "engine_version": ENGINE_VERSION,
        "space": space.value,
        "slack": {"delta": slack.delta, "precision_bits": slack.precision_bits},
        "outcome": tree["outcome"],
        "tree": tree,
    }
    if extra:
        cert.update(extra)
    return cert


# ---------------------------------------------------------------------------
# H3 banded sweep
# ---------------------------------------------------------------------------

def _sweep_row(claim: RegionClaim, w: Fraction, table: SweepAreaTable,
               slack: SlackConfig, window: StepWindow) -> dict:
    """Run one sweep row at band height w; returns the row certificate."""
    rw, rh = claim.rect_w, claim.rect_h
    wf = float(w)
    if claim.ray_only:
        # sweep only the boxes whose certified strip straddles the ray
        # v = 0.85 w across this row's band
        x_lo = RAY_RATIO * (w - rh / 2)
        x_hi = RAY_RATIO * (w + rh / 2)
        i_lo = math.floor((x_lo + rw / 2 - claim.v_min) / rw)
        i_hi = i_lo
        while claim.v_min + i_hi * rw + rw / 2 < x_hi:
            i_hi += 1
        v_start = claim.v_min + i_lo * rw
        if not v_start - rw / 2 <= x_lo:
            raise RegionViolation("ray coverage broken at the row start")
    else:
        i_lo = 0
        while claim.v_min + (i_lo + 1) * rw < RAY_RATIO * w:
            i_lo += 1
        i_hi = i_lo
        while claim.v_min + i_hi * rw <= w + rw:
            i_hi += 1
        i_hi -= 1
        v_start = claim.v_min + i_lo * rw
        if not v_start <= RAY_RATIO * w:
            raise RegionViolation("row start right of the band edge")

    row = {"w": str(w), "v_start": str(v_start),
           "boxes": i_hi - i_lo + 1, "outcome": "proved"}
    be = get_backend(slack.precision_bits)
    # fresh per-row start: seed the tracked pair at the first box's window
    seed_v = float(v_start) + 1.25 * float(rw)
    seed_w = wf + 1.25 * float(rh)
    try:
        k1, k2 = fm.h3_solve_pair(min(seed_v, seed_w), max(seed_v, seed_w))
        state = StepperState(k1, k2, claim.adj_main, claim.adj_second)
        state = curvature_pair_step(state, float(v_start), wf,
                                    float(rw), float(rh),
                                    slack=slack, window=window)
    except (StepFailure, CurvatureUnderflow, NoConvergence, DomainError) as exc:
        row.update(outcome="failed", failure=f"row start: {exc}",
                   fail_at=[str(v_start), str(w)])
        return row

    worst = None
    delta = slack.delta
    for i in range(i_lo, i_hi + 1):
        v = claim.v_min + i * rw
        vf = float(v)
        d = be.h3_sdb(max(state.k1, state.k2), min(state.k1, state.k2))
        enc_v, enc_w = ((d["v"], d["w"]) if state.k1 >= state.k2
                        else (d["w"], d["v"]))
        ok_v = (enc_v.lo > vf + window.lo_frac * float(rw) + delta
                and enc_v.hi < vf + window.hi_frac * float(rw))
        ok_w = (enc_w.lo > wf + window.lo_frac * float(rh) + delta
                and enc_w.hi < wf + window.hi_frac * float(rh))
        if not (ok_v and ok_w):
            row.update(outcome="failed", fail_at=[str(v), str(w)],
                       failure="curvature pair left its box")
            return row
        g_low = (2 * table[table.index_at_or_below((v - rw) / 2)]
                 + table[table.index_at_or_below(w - rw) + 1]
                 + table[table.index_at_or_below(v + w - rw)])
        h_up = 2 * pad_upper(d["area"], 3 * delta)
        margin = g_low - h_up
        if not margin > 0:
            row.update(outcome="failed", fail_at=[str(v), str(w)],
                       failure="positivity check failed",
                       g_min=g_low, h_max=h_up)
            return row
        if worst is None or margin < worst[0]:
            worst = (margin, str(v), g_low, h_up)
        if i < i_hi:
            try:
                state = curvature_pair_step(state, float(v + rw), wf,
                                            float(rw), float(rh),
                                            slack=slack, window=window)
            except (StepFailure, CurvatureUnderflow) as exc:
                row.update(outcome="failed", fail_at=[str(v + rw), str(w)],
                           failure=str(exc))
                return row
    row.update(method="sweep_row", tightest_v=worst[1],
               g_min=worst[2], h_max=worst[3])
    return row


def _sweep_row_task(args):
    claim, w_str, slack, window = args
    table = SweepAreaTable((claim.v_min - claim.rect_w) / 2, claim.rect_w / 2,
                           slack=slack)
    return _sweep_row(claim, Fraction(w_str), table, slack, window)


def sweep_band_h3(claim: RegionClaim, *, slack: SlackConfig | None = None,
                  jobs: int = 1, window: StepWindow | None = None,
                  row_limit: int | None = None) -> dict:
    """Run the banded sweep of one region claim; `row_limit` truncates the
    band (sampling mode for tests)."""
    slack = slack or SlackConfig()
    window = window or StepWindow()
    rows_w = []
    w = claim.w_min + claim.rect_h
    while w <= claim.w_max + claim.rect_h:
        rows_w.append(w)
        w += claim.rect_h
    if row_limit is not None:
        rows_w = rows_w[:row_limit]
    if jobs > 1:
        args = [(claim, str(w), slack, window) for w in rows_w]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_sweep_row_task, args, chunksize=16))
    else:
        table = SweepAreaTable((claim.v_min - claim.rect_w) / 2,
                               claim.rect_w / 2, slack=slack)
        rows = [_sweep_row(claim, w, table, slack, window) for w in rows_w]
    rows.sort(key=lambda r: Fraction(r["w"]))
    outcome = "proved" if all(r["outcome"] == "proved" for r in rows) else "failed"
    tree = {
        "region": {"kind": "band", "claim": claim.name,
                   "w_min": str(claim.w_min), "w_max": str(claim.w_max),
                   "rect_w": str(claim.rect_w), "rect_h": str(claim.rect_h),
                   "ray_only": claim.ray_only},
        "method": "sweep_band",
        "outcome": outcome,
        "children": rows,
        "depth": 0,
    }
    return _wrap_certificate(SpaceTag.H3, tree, slack,
                             {"claim": claim.name, "rows": len(rows)})


# ---------------------------------------------------------------------------
# coverage classification
# ---------------------------------------------------------------------------

S3_MIN_FRACTION = Fraction(1, 10)
H3_SMALL_CUTOFF = 0.002743
H3_BAND_TOP = 150.0
H3_RAY_TOP = 300.0


def classify_coverage(space: SpaceTag, v: float, w: float, *,
                      _depth: int = 0) -> list:
    """Reduction chain proving the volume-v region of the (v, w) minimizer is
    connected, ending in a primitive certified region.

    S3 inputs are normalized fractions with all three regions >= 1/10; H3
    inputs are raw volumes with min >= 0.85 max."""
    if _depth > 6:
        raise Uncovered(f"no reduction chain for ({v}, {w}) in {space}")
    if space is SpaceTag.S3:
        u = 1 - v - w
        if min(v, w, u) < float(S3_MIN_FRACTION) - 1e-12:
            raise Uncovered("outside the 10% hypothesis region")
        if v > 2 * w or v > 2 * u:
            return [{"step": "hutchings_balancing", "at": [v, w]}]
        if v <= w and v <= 1 - 2 * w:
            return [{"step": "s3_computer", "at": [v, w]}]
        if w < v <= 2 * w:
            m = (v + w) / 2
            return ([{"step": "s_balancing", "at": [v, w], "to": [m, m]}]
                    + classify_coverage(space, m, m, _depth=_depth + 1))
        # v <= w but above the w = u line: exchange w with the exterior
        return ([{"step": "permutation", "at": [v, w], "to": [v, u]}]
                + classify_coverage(space, v, u, _depth=_depth + 1))
    if space is SpaceTag.H3:
        if min(v, w) < 0.85 * max(v, w) - 1e-12:
            raise Uncovered("outside the 85% hypothesis region")
        if v > w:
            m = (v + w) / 2
            return ([{"step": "s_balancing", "at": [v, w], "to": [m, m]}]
                    + classify_coverage(space, m, m, _depth=_depth + 1))
        if w < H3_SMALL_CUTOFF:
            return [{"step": "h3_small", "at": [v, w]}]
        if w <= H3_BAND_TOP:
            return [{"step": "h3_computer", "at": [v, w]}]
        if w <= H3_RAY_TOP:
            return [{"step": "h3_ray_plus_derivative", "at": [v, w]}]
        return [{"step": "h3_large", "at": [v, w]}]
    raise Uncovered("unsupported space")


# ---------------------------------------------------------------------------
# theorem orchestration
# ---------------------------------------------------------------------------

def _coverage_grid(space: SpaceTag, n: int, seed: int = 20260810) -> dict:
    """Pseudo-random classifier exhaustiveness check over the hypothesis
    region; deterministic golden-ratio lattice sampling."""
    import numpy as np

    rng = np.random.default_rng(seed)
    checked = 0
    if space is SpaceTag.S3:
        while checked < n:
            for vb, wb, ub in rng.dirichlet((1, 1, 1), size=4 * n):
                if min(vb, wb, ub) >= 0.1:
                    classify_coverage(space, float(vb), float(wb))
                    checked += 1
                    if checked >= n:
                        break
    else:
        ws = 10.0 ** rng.uniform(-4, 4, size=n)
        ratios = rng.uniform(0.85, 1.0 / 0.85, size=n)
        for w, q in zip(ws, ratios):
            classify_coverage(space, float(q * w), float(w))
            checked += 1
    return {"space": space.value, "samples": int(checked), "uncovered": 0}


def prove_theorem(space: SpaceTag, mode: str = "full", *,
                  claims: list[str] | None = None,
                  slack: SlackConfig | None = None, jobs: int = 1,
                  depth_budget: int = DEPTH_BUDGET_DEFAULT,
                  coverage_samples: int = 10000,
                  window: StepWindow | None = None,
                  row_limit: int | None = None) -> dict:
    """Composite certificate for the main theorems.

    S3 (mode "full"): rectangle proof + triangle proof + coverage grid.
    H3: the selected region claims ("spot"), the ray claim ("ray"), or the
    full claim table ("full"); plus the coverage grid."""
    slack = slack or SlackConfig()
    if space is SpaceTag.S3:
        prover = _S3Prover(slack, depth_budget)
        rect_tree = prover.rectangle(S3_SQUARE)
        tri_tree = prover.triangle(S3_TRIANGLE)
        coverage = _coverage_grid(space, coverage_samples)
        outcome = ("proved" if rect_tree["outcome"] == tri_tree["outcome"] == "proved"
                   else "failed")
        tree = {"region": {"kind": "s3_domain"}, "method": "composite",
                "outcome": outcome, "depth": 0,
                "children": [rect_tree, tri_tree]}
        return _wrap_certificate(space, tree, slack,
                                 {"coverage": coverage, "mode": mode,
                                  "backend": backend_name(slack.precision_bits)})
    if space is SpaceTag.H3:
        if mode == "full":
            selected = list(CLAIMS)
        elif mode == "ray":
            selected = ["5.20"]
        else:
            selected = claims or ["5.9", "5.20"]
        children = []
        for name in selected:
            cert = sweep_band_h3(CLAIMS[name], slack=slack, jobs=jobs,
                                 window=window, row_limit=row_limit)
            children.append(cert["tree"])
        coverage = _coverage_grid(space, coverage_samples)
        outcome = ("proved" if all(c["outcome"] == "proved" for c in children)
                   else "failed")
        tree = {"region": {"kind": "h3_domain", "claims": selected},
                "method": "composite", "outcome": outcome, "depth": 0,
                "children": children}
        return _wrap_certificate(space, tree, slack,
                                 {"coverage": coverage, "mode": mode,
                                  "backend": backend_name(slack.precision_bits)})
    raise DomainError("prove_theorem supports S3 and H3 only")
