import io
import json
import subprocess
import sys

import pytest

from agreeable import dumps_society, five_cycle_boxes, save_society
from agreeable.cli import main


def run_cli(argv, monkeypatch=None, stdin_text=None, capsys=None):
    if stdin_text is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_text(tmp_path, capsys, consensus_candidate_society):
    path = str(tmp_path / "s.json")
    save_society(consensus_candidate_society, path)
    code, out, _ = run_cli(["analyze", path], capsys=capsys)
    assert code == 0
    assert "agreement number: 6" in out
    assert "agreement proportion: 1" in out


def test_analyze_json_with_bounds(tmp_path, capsys, seven_voter_society):
    path = str(tmp_path / "s.json")
    save_society(seven_voter_society, path)
    code, out, _ = run_cli(["analyze", path, "--k", "2", "--m", "3", "--format", "json"], capsys=capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["agreement_number"] == 4
    assert obj["agreement_proportion"] == "4/7"
    assert obj["bound_sheet"]["bounds"][1]["value"] == "1/2"
    assert obj["bound_sheet"]["bounds"][1]["satisfied"] is True


def test_analyze_malformed_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    code, _, err = run_cli(["analyze", str(path)], capsys=capsys)
    assert code == 2
    assert "line" in err


def test_analyze_invalid_society(tmp_path, capsys):
    path = tmp_path / "invalid.json"
    path.write_text('{"spectrum": "line", "voters": [{"id": "v1", "interval": [3, 1]}]}')
    code, _, err = run_cli(["analyze", str(path)], capsys=capsys)
    assert code == 2
    assert "lo > hi" in err


def test_analyze_missing_file(capsys):
    code, _, err = run_cli(["analyze", "/nonexistent/file.json"], capsys=capsys)
    assert code == 2


def test_analyze_needs_both_k_and_m(tmp_path, capsys, seven_voter_society):
    path = str(tmp_path / "s.json")
    save_society(seven_voter_society, path)
    code, _, err = run_cli(["analyze", path, "--k", "2"], capsys=capsys)
    assert code == 2
    assert "--m" in err


def test_generate_pipes_into_analyze(monkeypatch, capsys):
    code, generated, _ = run_cli(
        ["generate", "extremal", "--n", "21", "--k", "4", "--m", "15"], capsys=capsys
    )
    assert code == 0
    code, out, _ = run_cli(
        ["analyze", "-", "--k", "4", "--m", "15"],
        monkeypatch=monkeypatch,
        stdin_text=generated,
        capsys=capsys,
    )
    assert code == 0
    assert "agreement number: 5" in out
    assert "clique: 5 -> satisfied" in out


def test_generate_clique_isolated_analyzes_to_nine(monkeypatch, capsys):
    code, generated, _ = run_cli(
        ["generate", "clique-isolated", "--n", "10", "--k", "3", "--m", "4"], capsys=capsys
    )
    assert code == 0
    code, out, _ = run_cli(
        ["analyze", "-"], monkeypatch=monkeypatch, stdin_text=generated, capsys=capsys
    )
    assert "agreement number: 9" in out


def test_generate_five_cycle(tmp_path, capsys):
    out_path = tmp_path / "ring.json"
    code, _, _ = run_cli(["generate", "five-cycle-boxes", "--out", str(out_path)], capsys=capsys)
    assert code == 0
    assert out_path.read_text() == dumps_society(five_cycle_boxes())


def test_generate_random_is_deterministic(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    argv = ["generate", "random", "--kind", "line", "--n", "12", "--seed", "7"]
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_generate_invalid_params(capsys):
    code, _, err = run_cli(
        ["generate", "extremal", "--n", "3", "--k", "2", "--m", "5"], capsys=capsys
    )
    assert code == 2
    assert "error" in err


def test_check_command(tmp_path, capsys, seven_voter_society):
    path = str(tmp_path / "s.json")
    save_society(seven_voter_society, path)
    code, out, _ = run_cli(["check", path, "--k", "2", "--m", "3"], capsys=capsys)
    assert code == 0
    assert "yes" in out
    code, out, _ = run_cli(
        ["check", path, "--k", "3", "--m", "4", "--format", "json"], capsys=capsys
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["agreeable"] is False
    assert obj["witness"] == ["v1", "v2", "v4", "v5"]


def test_bounds_command(capsys):
    code, out, _ = run_cli(
        ["bounds", "--k", "4", "--m", "15", "--n", "21", "--format", "json"], capsys=capsys
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["q"] == 4 and obj["rho"] == 2
    assert obj["clique_bound"] == 5
    assert obj["proportion_bound"] == "3/14"

    code, out, _ = run_cli(["bounds", "--k", "2", "--m", "3", "--d", "1"], capsys=capsys)
    assert code == 0
    assert "fractional_helly" in out


def test_verify_command_passes(capsys):
    code, out, _ = run_cli(["verify", "--suite", "graph", "--trials", "10", "--seed", "1"], capsys=capsys)
    assert code == 0
    assert "RESULT PASS" in out


def test_verify_detects_corruption(monkeypatch, capsys, tmp_path):
    import agreeable.verify as verify_mod

    monkeypatch.chdir(tmp_path)  # failing instances land in cwd by default
    monkeypatch.setattr(verify_mod, "proportion_bound", lambda p: 2)
    code, out, _ = run_cli(["verify", "--suite", "linear", "--trials", "20", "--seed", "1"], capsys=capsys)
    assert code == 1
    assert "FAIL" in out
    assert "violation:" in out
    assert list(tmp_path.glob("linear_*.json"))


def test_verify_json_format(capsys):
    code, out, _ = run_cli(
        ["verify", "--suite", "box", "--trials", "5", "--seed", "2", "--format", "json"],
        capsys=capsys,
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["ok"] is True
    assert obj["properties"]


def test_unknown_flags_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "x.json", "--bogus"])
    assert exc.value.code == 2


def test_console_entry_point_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "agreeable", "bounds", "--k", "2", "--m", "3"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "proportion_bound: 1/2" in result.stdout
