"""Command-line front end: run proofs, emit grids and certificates, run the
lemma suite, verify certificates.

Exit codes: 0 proved/ok, 1 failed leaf or rejected certificate, 2
configuration error, 3 internal error.
"""

from __future__ import annotations

import argparse
import configparser
import json
import os
import sys
from pathlib import Path

from . import asymptotics
from .backend import backend_name
from .bounds import VolumePair, hutchings_point
from .certificate import verify_certificate, write_certificate
from .enclosure import SlackConfig
from .engine import CLAIMS, prove_theorem
from .errors import BubbleProofError, CertificateError
from .geometry import SpaceTag

EXIT_PROVED = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_INTERNAL = 3


def _load_config(path, space: str) -> dict:
    cfg = {}
    if not path:
        return cfg
    parser = configparser.ConfigParser()
    if not parser.read(path):
        raise ValueError(f"config file {path} not readable")
    for section in ("global", space):
        if parser.has_section(section):
            cfg.update(parser[section])
    return cfg


def _slack(args, cfg) -> SlackConfig:
    delta = args.delta if args.delta is not None else float(cfg.get("delta", 2.0 ** -24))
    bits = (args.precision_bits if args.precision_bits is not None
            else int(cfg.get("precision_bits", 53)))
    return SlackConfig(delta=delta, precision_bits=bits)


def _out_dir(args, cfg) -> Path:
    if args.out:
        return Path(args.out)
    env = os.environ.get("BUBBLE_CERT_DIR")
    if env:
        return Path(env)
    return Path(cfg.get("out_dir", "certificates"))


def cmd_prove(args) -> int:
    cfg = _load_config(args.config, args.space)
    slack = _slack(args, cfg)
    space = SpaceTag(args.space)
    mode = args.mode or cfg.get("mode", "spot" if space is SpaceTag.H3 else "full")
    claims = args.claims.split(",") if args.claims else None
    if claims:
        unknown = [c for c in claims if c not in CLAIMS]
        if unknown:
            print(f"unknown claims: {unknown}", file=sys.stderr)
            return EXIT_CONFIG
    if space is SpaceTag.H3 and mode == "full":
        print("warning: the full band sweep covers every region claim and "
              "corresponds to a verification that originally ran for well "
              "over a hundred hours; expect a long run.", file=sys.stderr)
    jobs = args.jobs if args.jobs is not None else int(cfg.get("jobs", 1))
    cert = prove_theorem(space, mode, claims=claims, slack=slack, jobs=jobs,
                         depth_budget=args.depth_budget,
                         coverage_samples=args.coverage_samples,
                         row_limit=args.row_limit)
    out = _out_dir(args, cfg)
    name = f"{args.space}-{mode}.json" if out.suffix != ".json" else None
    path = out / name if name else out
    write_certificate(cert, path)
    print(f"outcome: {cert['outcome']}  backend: {cert.get('backend', backend_name())}")
    print(f"certificate: {path}")
    return EXIT_PROVED if cert["outcome"] == "proved" else EXIT_FAILED


def cmd_grid(args) -> int:
    try:
        vmin, vmax, wmin, wmax, res = args.grid.split(":")
        vmin, vmax, wmin, wmax = map(float, (vmin, vmax, wmin, wmax))
        res = int(res)
    except ValueError:
        print("--grid expects VMIN:VMAX:WMIN:WMAX:RES", file=sys.stderr)
        return EXIT_CONFIG
    space = SpaceTag(args.space)
    lines = ["v,w,F"]
    for i in range(res):
        v = vmin + (vmax - vmin) * i / max(res - 1, 1)
        for j in range(res):
            w = wmin + (wmax - wmin) * j / max(res - 1, 1)
            try:
                f = repr(hutchings_point(space, VolumePair(v, w)))
            except BubbleProofError:
                f = ""
            lines.append(f"{v!r},{w!r},{f}")
    out = Path(args.out or "grid.csv")
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(lines) + "\n")
    print(f"grid: {out} ({res}x{res})")
    return EXIT_PROVED


def cmd_lemmas(args) -> int:
    selection = args.select.split(",") if args.select else None
    try:
        reports = asymptotics.run_checks(selection)
    except KeyError as exc:
        print(f"unknown lemma check: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    width = max(len(r.lemma_id) for r in reports)
    all_pass = True
    for r in reports:
        all_pass &= r.passed
        print(f"{r.lemma_id:<{width}}  {'pass' if r.passed else 'FAIL'}  "
              f"min margin {min(r.margins):.3e}  ({len(r.margins)} margins)")
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(json.dumps(
            [r.to_json() for r in reports], indent=2, sort_keys=True) + "\n")
        print(f"report: {args.out}")
    return EXIT_PROVED if all_pass else EXIT_FAILED


def cmd_cert(args) -> int:
    if args.action != "verify":
        print("usage: cert verify PATH", file=sys.stderr)
        return EXIT_CONFIG
    try:
        errors = verify_certificate(args.path)
    except CertificateError as exc:
        print(f"certificate error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    if errors:
        for e in errors:
            print(f"violation: {e}", file=sys.stderr)
        return EXIT_FAILED
    print("certificate verified: all stored leaf inequalities hold")
    return EXIT_PROVED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bubbleproof",
        description="Certified positivity verification for double-bubble "
                    "area inequalities in S3 and H3.")
    sub = p.add_subparsers(dest="command", required=True)

    prove = sub.add_parser("prove", help="run a proof and emit a certificate")
    prove.add_argument("--space", choices=["s3", "h3"], required=True)
    prove.add_argument("--mode", choices=["full", "spot", "ray"])
    prove.add_argument("--claims", help="comma-separated claim names (h3 spot)")
    prove.add_argument("--delta", type=float, default=None)
    prove.add_argument("--precision-bits", type=int, default=None)
    prove.add_argument("--jobs", type=int, default=None)
    prove.add_argument("--depth-budget", type=int, default=30)
    prove.add_argument("--coverage-samples", type=int, default=10000)
    prove.add_argument("--row-limit", type=int, default=None,
                       help="truncate each band sweep (sampling/testing)")
    prove.add_argument("--out", help="output path or directory")
    prove.add_argument("--config", help="key-value configuration file")
    prove.set_defaults(fn=cmd_prove)

    grid = sub.add_parser("grid", help="emit a CSV grid of midpoint F values")
    grid.add_argument("--space", choices=["s3", "h3"], required=True)
    grid.add_argument("--grid", required=True, metavar="VMIN:VMAX:WMIN:WMAX:RES")
    grid.add_argument("--out")
    grid.set_defaults(fn=cmd_grid)

    lem = sub.add_parser("lemmas", help="run the analytic-check suite")
    lem.add_argument("--select", help="comma-separated check names")
    lem.add_argument("--out", help="JSON report path")
    lem.set_defaults(fn=cmd_lemmas)

    cert = sub.add_parser("cert", help="certificate operations")
    cert.add_argument("action", choices=["verify"])
    cert.add_argument("path")
    cert.set_defaults(fn=cmd_cert)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except BubbleProofError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
