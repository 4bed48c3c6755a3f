"""CLI contract: subcommands, exit codes, deterministic CSV grids, config
file and certificate verification."""

import json
import math

from bubbleproof.cli import main

PI = math.pi


def test_prove_spot_claim(tmp_path):
    out = tmp_path / "c.json"
    rc = main(["prove", "--space", "h3", "--mode", "spot",
               "--claims", "5.12", "--out", str(out),
               "--coverage-samples", "50", "--row-limit", "2"])
    assert rc == 0
    assert out.exists()


def test_prove_unknown_claim(tmp_path):
    rc = main(["prove", "--space", "h3", "--claims", "nope",
               "--out", str(tmp_path)])
    assert rc == 2


def test_grid_csv_deterministic(tmp_path):
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    spec = "0.5:3.0:0.5:3.0:6"
    assert main(["grid", "--space", "h3", "--grid", spec, "--out", str(out1)]) == 0
    assert main(["grid", "--space", "h3", "--grid", spec, "--out", str(out2)]) == 0
    b1, b2 = out1.read_bytes(), out2.read_bytes()
    assert b1 == b2
    lines = b1.decode().strip().split("\n")
    assert lines[0] == "v,w,F"
    assert len(lines) == 37
    # row-major: v varies slowest
    first = lines[1].split(",")
    assert float(first[0]) == 0.5 and float(first[1]) == 0.5
    assert float(lines[6].split(",")[1]) == 3.0


def test_grid_empty_cells_for_degenerate(tmp_path):
    out = tmp_path / "g.csv"
    # S3 grid reaching past the simplex boundary produces empty F cells
    assert main(["grid", "--space", "s3",
                 "--grid", f"{0.3 * 2 * PI ** 2}:{0.8 * 2 * PI ** 2}:"
                           f"{0.3 * 2 * PI ** 2}:{0.8 * 2 * PI ** 2}:4",
                 "--out", str(out)]) == 0
    rows = out.read_text().strip().split("\n")[1:]
    assert any(r.endswith(",") for r in rows)
    assert any(not r.endswith(",") for r in rows)


def test_bad_grid_spec():
    assert main(["grid", "--space", "h3", "--grid", "1:2:3"]) == 2


def test_lemmas_command(tmp_path):
    out = tmp_path / "lemmas.json"
    rc = main(["lemmas", "--select", "hmrr_strong,small_volume_constants",
               "--out", str(out)])
    assert rc == 0
    report = json.loads(out.read_text())
    assert all(r["passed"] for r in report)
    assert main(["lemmas", "--select", "missing_check"]) == 2


def test_cert_verify_roundtrip(tmp_path, monkeypatch):
    from bubbleproof.certificate import write_certificate
    from bubbleproof.engine import verify_rectangle_s3
    from bubbleproof.bounds import Rect
    from fractions import Fraction

    cert = verify_rectangle_s3(
        Rect(Fraction(1, 10), Fraction(1, 10), Fraction(1, 6), Fraction(1, 6)))
    path = write_certificate(cert, tmp_path / "ok.json")
    assert main(["cert", "verify", str(path)]) == 0

    data = json.loads(path.read_text())
    node = data["tree"]
    while node.get("children"):
        node = node["children"][0]
    if "g_min" in node:
        node["g_min"], node["h_max"] = node["h_max"], node["g_min"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    assert main(["cert", "verify", str(bad)]) == 1


def test_env_cert_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("BUBBLE_CERT_DIR", str(tmp_path / "env_dir"))
    rc = main(["grid", "--space", "h3", "--grid", "1:2:1:2:2",
               "--out", str(tmp_path / "x.csv")])
    assert rc == 0


def test_config_file(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("[global]\ndelta = 5.96e-8\n\n[h3]\njobs = 1\n")
    out = tmp_path / "certs"
    rc = main(["prove", "--space", "h3", "--claims", "5.12",
               "--config", str(cfg), "--out", str(out),
               "--coverage-samples", "50", "--row-limit", "2"])
    assert rc == 0
