"""CLI surface: subcommand outputs, exit codes, pipelines via stdin, and
byte-identical reruns."""

import io
import json

from evenfactor.cli import main
from evenfactor.graph6 import write_graph6
from evenfactor.graphs import extremal


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_threshold_edges(capsys):
    code, out, _ = run(capsys, ["threshold", "--n", "8", "--delta", "2", "--edges"])
    assert code == 0
    assert out == "23\n"


def test_threshold_rho(capsys):
    code, out, _ = run(capsys, ["threshold", "--n", "8", "--delta", "2", "--rho"])
    assert code == 0
    assert out.strip().startswith("6.0969240956")


def test_threshold_both(capsys):
    code, out, _ = run(capsys, ["threshold", "--n", "8", "--delta", "2"])
    assert code == 0
    assert out.splitlines()[0] == "edges 23"
    assert out.splitlines()[1].startswith("rho 6.09692")


def test_gen_formats(capsys):
    code, out, _ = run(capsys, ["gen", "extremal", "--n", "8", "--delta", "2"])
    assert code == 0
    assert out.strip() == write_graph6(extremal(8, 2))
    code, out, _ = run(
        capsys,
        ["gen", "family", "--s", "2", "--parts", "5,1", "--format", "edgelist"],
    )
    assert code == 0
    assert out.splitlines()[0] == "8"


def test_gen_family_unsorted_parts_rejected(capsys):
    code, _, err = run(capsys, ["gen", "family", "--s", "2", "--parts", "1,5"])
    assert code == 2
    assert "usage-error" in err


def test_pipeline_check_even_factor(capsys, monkeypatch):
    g6 = write_graph6(extremal(8, 2))
    code, out, _ = run(capsys, ["check", "even-factor"], stdin=g6, monkeypatch=monkeypatch)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "exists"
    assert lines[1].startswith("cost ")
    assert all(len(line.split()) == 2 for line in lines[2:])


def test_check_even_factor_unknown_exits_4(capsys):
    g6 = write_graph6(extremal(8, 2))
    code, out, _ = run(capsys, ["check", "even-factor", "--graph6", g6, "--max-dim", "3"])
    assert code == 4
    assert out.splitlines()[0] == "unknown"


def test_check_condition(capsys):
    g6 = write_graph6(extremal(8, 2))
    code, out, _ = run(capsys, ["check", "condition", "--graph6", g6])
    assert code == 0
    assert out.strip() == "violated S=0,1 odd_components=2"


def test_spectral(capsys, monkeypatch):
    g6 = write_graph6(extremal(8, 2))
    code, out, _ = run(capsys, ["spectral"], stdin=g6, monkeypatch=monkeypatch)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("rho 6.09692409")
    assert lines[1].startswith("iterations ")
    assert lines[2].startswith("residual ")


def test_verdict_extremal(capsys):
    g6 = write_graph6(extremal(8, 2))
    code, out, _ = run(capsys, ["verdict", "--graph6", g6])
    assert code == 0
    blob = json.loads(out)
    assert blob["guarantee"] == "extremal_exception"
    assert blob["e_G"] == 23 and blob["edge_threshold"] == 23


def test_verdict_from_edgelist_file(capsys, tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("4\n0 1\n1 2\n2 3\n3 0\n0 2\n1 3\n")
    code, out, _ = run(capsys, ["verdict", "--file", str(p), "--which", "edges"])
    assert code == 0
    assert json.loads(out)["n"] == 4


def test_parse_error_exits_3(capsys, monkeypatch):
    code, _, err = run(capsys, ["check", "condition"], stdin="!!!", monkeypatch=monkeypatch)
    assert code == 3
    assert "parse-error" in err
    code, _, err = run(
        capsys, ["verdict", "--graph6", chr(30) + "bad"],
    )
    assert code == 3


def test_usage_error_exits_2(capsys):
    code, _, err = run(capsys, ["threshold", "--n", "5", "--delta", "3", "--edges"])
    assert code == 2
    assert "usage-error" in err
    code, _, err = run(capsys, ["report", "tightness", "--n", "6", "--delta", "3", "--out", "/tmp/x.json"])
    assert code == 2


def test_verify_identities(capsys):
    code, out, err = run(
        capsys, ["verify", "identities", "--delta-max", "2", "--n-extra", "2"]
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines
    for line in lines[:20]:
        blob = json.loads(line)
        assert blob["pass"] in (True, None)
    assert "failures=0" in err


def test_verify_lemmas(capsys):
    code, out, err = run(
        capsys, ["verify", "lemmas", "--max-n", "9", "--max-s", "2", "--p", "1"]
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("campaign,seed,row_id")
    assert "counterexamples=0" in err


def test_sweep_soundness(capsys, tmp_path):
    out_path = tmp_path / "sweep.csv"
    code, out, _ = run(
        capsys,
        [
            "sweep", "soundness", "--n", "8", "--delta", "2",
            "--samples", "25", "--seed", "42", "--which", "edges",
            "--out", str(out_path),
        ],
    )
    assert code == 0
    assert "counterexamples=0" in out
    lines = out_path.read_text().splitlines()
    assert lines[0].startswith("campaign,")
    assert len(lines) == 26


def test_sweep_rerun_is_byte_identical_modulo_timing(capsys, tmp_path):
    argv = [
        "sweep", "soundness", "--n", "8", "--delta", "2",
        "--samples", "20", "--seed", "11", "--which", "spectral",
    ]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    capsys.readouterr()

    def strip_timing(text):
        return ["," .join(line.split(",")[:-1]) for line in text.splitlines()]

    assert strip_timing(a.read_text()) == strip_timing(b.read_text())


def test_report_tightness(capsys, tmp_path):
    out_path = tmp_path / "tight.json"
    code, out, _ = run(
        capsys,
        ["report", "tightness", "--n", "8", "--delta", "2", "--out", str(out_path)],
    )
    assert code == 0
    assert "checks_passed=5/5" in out
    blob = json.loads(out_path.read_text())
    assert blob["findings"]["extremal_oracle_finding"]["status"] == "exists"


def test_same_argv_same_stdout(capsys):
    argv = ["verify", "identities", "--delta-max", "2", "--n-extra", "1"]
    code1, out1, _ = run(capsys, argv)
    code2, out2, _ = run(capsys, argv)
    assert (code1, out1) == (code2, out2)
