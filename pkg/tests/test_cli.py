"""Command-line surface: outputs, exit codes, determinism."""

import io
import json

import pytest

from z2cb.cli import run
from z2cb.gf2core import format_matrix, min_distance, parse_matrix
from z2cb.verifier import remark_matrix

REMARK_TEXT = format_matrix(remark_matrix())


@pytest.fixture()
def remark_file(tmp_path):
    p = tmp_path / "remark.txt"
    p.write_text(REMARK_TEXT)
    return str(p)


def test_mindist_prints_parameters(remark_file, capsys):
    assert run(["mindist", remark_file]) == 0
    assert capsys.readouterr().out == "11 5 4\n"


def test_mindist_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(REMARK_TEXT))
    assert run(["mindist", "-"]) == 0
    assert capsys.readouterr().out == "11 5 4\n"


def test_mindist_missing_file(capsys):
    assert run(["mindist", "/no/such/file"]) == 2
    err = capsys.readouterr().err
    assert "error:" in err


def test_wdist_json(remark_file, capsys):
    assert run(["wdist", remark_file]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["min_distance"] == 4
    assert sum(payload["weight_distribution"]) == 32


def test_shorten_and_puncture_print_matrices(remark_file, capsys):
    assert run(["shorten", remark_file, "--coord", "0"]) == 0
    m = parse_matrix(capsys.readouterr().out)
    assert (m.n, m.k) == (10, 4)
    assert run(["puncture", remark_file, "--coord", "0"]) == 0
    assert parse_matrix(capsys.readouterr().out).n == 10


def test_output_flag_writes_file(remark_file, tmp_path, capsys):
    out = tmp_path / "sub.txt"
    assert run(["shorten", remark_file, "--coord", "0", "-o", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert parse_matrix(out.read_text()).n == 10


def test_bound_json(capsys):
    assert run(["bound", "--n", "23", "--k", "12"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["combined"] == 7
    assert payload["per_bound"]["sphere_packing"] == 7


def test_construct_and_search(capsys):
    assert run(["construct", "--name", "golay23"]) == 0
    m = parse_matrix(capsys.readouterr().out)
    assert (m.n, m.k, min_distance(m)) == (23, 12, 7)
    assert run(["search", "--n", "12", "--k", "7"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["d"] == 4
    assert payload["recipe"]


def test_construct_unknown_name(capsys):
    assert run(["construct", "--name", "nosuch(9)"]) == 2
    assert "error:" in capsys.readouterr().err


def test_analyze_rep(remark_file, capsys):
    assert run(["analyze-rep", remark_file]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["min_codim"] == 4
    assert payload["distinct_characters"] == 9


def test_analyze_rep_rejects_dependent_rows(tmp_path, capsys):
    p = tmp_path / "dep.txt"
    p.write_text("110\n110\n")
    assert run(["analyze-rep", str(p)]) == 2
    assert "error:" in capsys.readouterr().err


def test_verify_remark_matrix_four_pass_lines(capsys):
    assert run(["verify", "remark-matrix"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 4
    assert all(json.loads(line)["verdict"] == "PASS" for line in lines)


def test_verify_lemma12_scan_lines(capsys):
    assert run(["verify", "lemma12", "--part", "1", "--scan", "69..73"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 5
    assert json.loads(lines[0])["claim_id"] == "lemma12:part1:n=69"


def test_verify_lemma12_flag_validation(capsys):
    assert run(["verify", "lemma12", "--part", "1"]) == 2
    capsys.readouterr()
    assert run(["verify", "lemma12", "--part", "1", "--scan", "5-9"]) == 2
    capsys.readouterr()
    assert run(["verify", "lemma12", "--part", "1", "--scan", "9..3"]) == 2
    capsys.readouterr()
    assert run(["verify", "lemma12", "--part", "3", "--n", "7"]) == 2
    capsys.readouterr()
    assert run(["verify", "lemma12", "--part", "3"]) == 0


def test_verify_lemma14_defaults_to_embedded_matrix(capsys):
    assert run(["verify", "lemma14", "--part", "1"]) == 0
    first = json.loads(capsys.readouterr().out)
    assert first["verdict"] == "PASS"
    assert run(["verify", "lemma14", "--part", "2"]) == 0
    second = json.loads(capsys.readouterr().out)
    assert second["evidence"]["conclusion"] in ("a", "b")


def test_verify_lemma14_sample_scan(capsys):
    rc = run(
        ["verify", "lemma14", "--part", "2", "--sample", "20000", "--seed", "3", "--workers", "1"]
    )
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["evidence"]["fail"] == 0
    assert payload["evidence"]["count"] == 20000


def test_verify_lemma14_custom_matrix(tmp_path, capsys):
    p = tmp_path / "ham.txt"
    p.write_text("1101000\n0110100\n1110010\n1010001\n")
    assert run(["verify", "lemma14", "--part", "1", "--matrix", str(p)]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"] == "PASS"


def test_verify_tables_exit_codes(tmp_path, monkeypatch, capsys):
    assert run(["verify", "tables", "--table", "T4"]) == 0
    capsys.readouterr()
    bad = tmp_path / "bad.txt"
    bad.write_text("T4 4 3 2 3 3\n")
    monkeypatch.setenv("Z2CB_TABLE_PATH", str(bad))
    assert run(["verify", "tables", "--table", "T4"]) == 1
    out = capsys.readouterr().out
    assert any(json.loads(line)["verdict"] == "FAIL" for line in out.strip().splitlines())


def test_argparse_errors_exit_2(capsys):
    assert run(["nosuchcmd"]) == 2
    capsys.readouterr()
    assert run(["bound", "--n", "5"]) == 2
    capsys.readouterr()
    assert run([]) == 2


def test_stdout_byte_identical_across_runs(capsys):
    assert run(["verify", "remark-matrix"]) == 0
    first = capsys.readouterr().out
    assert run(["verify", "remark-matrix"]) == 0
    assert capsys.readouterr().out == first
