"""CLI plumbing: exit codes, config validation, deterministic output."""

import json

from pdgcell.cli import main


def run(argv, tmp_path, name="out.json"):
    out = tmp_path / name
    code = main(argv + ["--out", str(out)])
    return code, out


def test_exit_codes(tmp_path, capsys):
    code, out = run(["nilhecke", "--n", "1", "--l", "2", "--p", "3"], tmp_path)
    assert code == 0
    data = json.loads(out.read_text())
    assert data["ok"] and data["suite"] == "nilhecke"
    assert all(c["status"] == "pass" for c in data["checks"])


def test_invalid_config(capsys):
    assert main(["nilhecke", "--n", "4", "--l", "3", "--p", "5"]) == 2
    assert main(["nilhecke", "--n", "1", "--l", "3", "--p", "4"]) == 2
    assert main(["schur", "--p", "5"]) == 2
    assert main([]) == 2


def test_deterministic_output(tmp_path):
    _c1, o1 = run(["schur", "--n", "2", "--l", "3", "--p", "5"], tmp_path, "a.json")
    _c2, o2 = run(["schur", "--n", "2", "--l", "3", "--p", "5"], tmp_path, "b.json")
    assert o1.read_bytes() == o2.read_bytes()


def test_csv_format(tmp_path):
    out = tmp_path / "r.csv"
    code = main([
        "verify", "stosic", "--n", "2", "--l", "3", "--p", "5",
        "--format", "csv", "--out", str(out),
    ])
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "suite,check,status"
    assert all(line.endswith("pass") for line in lines[1:])


def test_zero_strand_report(tmp_path):
    code, out = run(["nilhecke", "--n", "0", "--l", "3", "--p", "3"], tmp_path)
    assert code == 0
    data = json.loads(out.read_text())
    assert data["checks"][0]["actual"] == 1
