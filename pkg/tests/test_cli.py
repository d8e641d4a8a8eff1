import json
import subprocess
import sys

import jsonschema
import pytest

from derangements.cli import main
from derangements.export import load_polynomials
from derangements.polys import cosine_derangement, derangement_poly, sine_derangement
from derangements.report import REPORT_SCHEMA


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_seq_derangement(capsys):
    code, out = run(capsys, "seq", "derangement", "--n-max", "10")
    assert code == 0
    assert [int(line.split("\t")[1]) for line in out.splitlines()] == [
        1, 0, 1, 2, 9, 44, 265, 1854, 14833, 133496, 1334961
    ]


def test_seq_csv_and_json(capsys):
    _, out = run(capsys, "seq", "euler", "--n-max", "3", "--format", "csv")
    assert out.splitlines() == ["n,value", "0,1", "1,-1/2", "2,0", "3,1/4"]
    _, out = run(capsys, "seq", "bell", "--n-max", "5", "--format", "json")
    assert json.loads(out) == {"kind": "bell", "values": [1, 1, 2, 5, 15, 52]}
    _, out = run(capsys, "seq", "stirling1", "--n-max", "3", "--format", "csv")
    assert out.splitlines() == ["1", "0,1", "0,-1,1", "0,2,-3,1"]


def test_poly(capsys):
    assert run(capsys, "poly", "cosine", "--n", "2")[1].strip() == "x^2 - y^2 + 1"
    assert run(capsys, "poly", "sine", "--n", "2")[1].strip() == "2*x*y"
    assert run(capsys, "poly", "derangement", "--n", "3")[1].strip() == "x^3 + 3*x + 2"
    assert run(capsys, "poly", "fixed-points", "--n", "3")[1].strip() == "x^3 + 3*x + 2"
    assert run(capsys, "poly", "cosine", "--n", "2", "--format", "latex")[1].strip() == "x^{2} - y^{2} + 1"
    data = json.loads(run(capsys, "poly", "derangement", "--n", "2", "--format", "json")[1])
    assert data == {"var": "x", "coeffs": ["1/1", "0/1", "1/1"]}


def test_poly_oracle_cap_is_error(capsys):
    code = main(["poly", "fixed-points", "--n", "12"])
    assert code == 2
    assert "oracle too large" in capsys.readouterr().err


def test_verify_json(capsys):
    code, out = run(capsys, "verify", "--n-max", "8", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    jsonschema.validate(reports, REPORT_SCHEMA)
    assert all(r["status"] == "Pass" for r in reports)


def test_verify_text_only(capsys):
    code, out = run(capsys, "verify", "--n-max", "6", "--only", "cosine-shift")
    assert code == 0
    assert "PASS  cosine-shift" in out
    assert "1/1 checks passed" in out


def test_verify_fails_on_tight_tail(capsys):
    code, out = run(capsys, "verify", "--n-max", "6", "--only", "euler-bell-abel", "--tail-terms", "5")
    assert code == 2


def test_mc(capsys):
    code, out = run(capsys, "mc", "--n", "3", "--p", "1/2", "--q", "1/2", "--kind", "cosine",
                    "--samples", "200000", "--seed", "4")
    assert code == 0
    data = json.loads(out)
    assert data["exact_value"] == 3.25
    assert abs(data["z_score"]) < 4
    assert {"mean", "std_error", "exact_value", "z_score"} <= set(data)


def test_export_roundtrip(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("DERANGEMENTS_OUT_DIR", str(tmp_path / "out"))
    code, out = run(capsys, "export", "--n-max", "12")
    assert code == 0
    polys = load_polynomials(tmp_path / "out" / "polynomials.json")
    assert polys["derangement"] == [derangement_poly(n).poly for n in range(13)]
    assert polys["cosine"] == [cosine_derangement(n).poly for n in range(13)]
    assert polys["sine"] == [sine_derangement(n).poly for n in range(13)]
    assert (tmp_path / "out" / "derangement.csv").read_text().splitlines()[5] == "4,9"
    assert (tmp_path / "out" / "stirling2.csv").exists()


@pytest.mark.parametrize("argv", [["seq", "derangement", "--bogus"], ["frobnicate"], []])
def test_usage_errors_exit_2(argv):
    proc = subprocess.run([sys.executable, "-m", "derangements", *argv], capture_output=True, text=True)
    assert proc.returncode == 2
    assert "usage" in proc.stderr
