"""CLI behaviour: subcommands, exit codes, formatting, determinism."""

import json
import math
import subprocess
import sys

import pytest

from zerobound.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- params -------------------------------------------------------------------

def test_params_newform(capsys):
    code, out, _ = run_cli(capsys, "params", "--preset", "newform", "--level", "1", "--weight", "12")
    assert code == 0
    doc = json.loads(out)
    assert doc["Q"] == pytest.approx(0.159154943092, rel=1e-11)
    assert doc["factors"] == [{"lambda": 1.0, "mu_re": 5.5, "mu_im": 0.0}]
    assert (doc["a"], doc["b"]) == (3.0, -4.0)
    assert doc["k"] == 0 and doc["a1"] == 1.0


def test_params_newform_requires_level_and_weight(capsys):
    code, _, err = run_cli(capsys, "params", "--preset", "newform")
    assert code == 1
    assert "level" in err


def test_params_zeta(capsys):
    code, out, _ = run_cli(capsys, "params", "--preset", "zeta")
    assert code == 0
    doc = json.loads(out)
    assert doc["factors"][0]["lambda"] == 0.5
    assert doc["k"] == 1


def test_params_validation_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "params", "--preset", "newform", "--level", "1", "--weight", "11")
    assert code == 1
    assert "weight" in err


# --- constants / bound -----------------------------------------------------------

@pytest.fixture()
def newform_doc(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "params", "--preset", "newform", "--level", "1", "--weight", "12")
    assert code == 0
    path = tmp_path / "nf.json"
    path.write_text(out)
    return path


def test_constants_report(newform_doc, capsys):
    code, out, _ = run_cli(capsys, "constants", "--input", str(newform_doc), "--t0", "27")
    assert code == 0
    doc = json.loads(out)
    assert doc["t"] == 54.0  # default upper height 2 * t0
    assert doc["alpha"] == 0
    assert doc["h2"] == 391.0
    assert doc["c1_dbl"] == pytest.approx(299.0 / math.log(2.0), rel=1e-9)
    assert doc["input"]["Q"] == pytest.approx(0.159154943092, rel=1e-11)


def test_constants_inadmissible(newform_doc, capsys):
    code, _, err = run_cli(capsys, "constants", "--input", str(newform_doc), "--t0", "20")
    assert code == 1
    assert "gamma-shift" in err


def test_bound_success(newform_doc, capsys):
    code, out, _ = run_cli(
        capsys, "bound", "--input", str(newform_doc), "--t0", "27", "--t", "100"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["r_total"] == pytest.approx(3316.23802511, rel=1e-11)
    assert doc["coeff_bound"] >= doc["r_total"]


def test_bound_rejects_bad_window(newform_doc, capsys):
    code, _, err = run_cli(capsys, "bound", "--input", str(newform_doc), "--t0", "27", "--t", "27")
    assert code == 1
    assert "T > T0" in err


# --- table -------------------------------------------------------------------------

def test_table_default_pairs(capsys):
    code, out, _ = run_cli(capsys, "table", "--preset", "newform")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "N,kappa,T0,cL1,cL2,cL3,c1,c2,c3"
    assert len(lines) == 26
    assert lines[1] == "1,12,27,293,1945,11637,432,1811,10506"
    assert lines[-1] == "64,40,55,979,-125,34631,432,2563,8060"


def test_table_custom_pairs(tmp_path, capsys):
    pairs = tmp_path / "pairs.csv"
    pairs.write_text("N,kappa\n11,2\n")
    code, out, _ = run_cli(capsys, "table", "--preset", "newform", "--pairs", str(pairs))
    assert code == 0
    assert out.strip().split("\n")[1] == "11,2,17,229,2941,21661,432,1879,24239"


def test_table_out_file(tmp_path, capsys):
    target = tmp_path / "table.csv"
    code, out, _ = run_cli(capsys, "table", "--preset", "newform", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("N,kappa,T0,")


def test_table_deterministic_across_processes():
    cmd = [sys.executable, "-m", "zerobound.cli", "table", "--preset", "newform"]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.stdout.decode().count("\n") == 26


# --- verify ---------------------------------------------------------------------------

@pytest.fixture()
def zeta_doc(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "params", "--preset", "zeta")
    assert code == 0
    path = tmp_path / "zeta.json"
    path.write_text(out)
    return path


def test_verify_passes_on_real_data(zeta_doc, zeta_zero_path, capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--input", str(zeta_doc), "--zeros", str(zeta_zero_path),
        "--t0", "16", "--t", "100",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 28
    assert doc["pass_lemma"] is True and doc["pass_theorem"] is True


def test_verify_fails_with_exit_two(zeta_doc, tmp_path, capsys):
    fake = tmp_path / "fake.txt"
    fake.write_text("".join(f"{20.0 + i * 0.0001}\n" for i in range(50_000)))
    code, out, _ = run_cli(
        capsys, "verify", "--input", str(zeta_doc), "--zeros", str(fake),
        "--t0", "16", "--t", "30",
    )
    assert code == 2
    assert json.loads(out)["pass_lemma"] is False


def test_verify_bad_zero_file(zeta_doc, tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("14.1\nnot-a-number\n")
    code, _, err = run_cli(
        capsys, "verify", "--input", str(zeta_doc), "--zeros", str(bad),
        "--t0", "16", "--t", "30",
    )
    assert code == 1
    assert "line 2" in err


# --- argument handling / formatting -------------------------------------------------------

def test_unknown_flag_exits_one(capsys):
    code, _, err = run_cli(capsys, "table", "--preset", "newform", "--bogus")
    assert code == 1
    assert "usage" in err.lower()


def test_unknown_subcommand_exits_one(capsys):
    code, _, err = run_cli(capsys, "frobnicate")
    assert code == 1


def test_precision_env_override(newform_doc, capsys, monkeypatch):
    monkeypatch.setenv("ZEROBOUND_PRECISION", "4")
    code, out, _ = run_cli(capsys, "params", "--preset", "newform", "--level", "1", "--weight", "12")
    assert code == 0
    assert json.loads(out)["Q"] == 0.1592


def test_json_uses_twelve_significant_digits(capsys):
    code, out, _ = run_cli(capsys, "params", "--preset", "zeta")
    assert code == 0
    assert json.loads(out)["Q"] == 0.564189583548  # 1/sqrt(pi) to 12 digits
