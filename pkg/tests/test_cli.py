import io
import json

import pytest

from banlinial import generators as gen
from banlinial.cli import main
from banlinial.formats import emit_edge_list, emit_graph6
from banlinial.graph import Split, verify_ban_linial
from banlinial.report import Report

from conftest import DATA


def run(capsys, monkeypatch, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    return code, capsys.readouterr()


def test_solve_petersen(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["solve", "--graph", "petersen", "--out", "json"])
    assert code == 0
    rep = Report.from_json(out.out)
    assert rep.schema == 1 and rep.verified
    assert abs(rep.report["imbalance"]) == 2
    assert rep.certificate is not None
    s = Split(rep.split["X"], rep.split["Y"])
    assert verify_ban_linial(gen.petersen(), s)


def test_solve_oracle_only(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch,
                    ["solve", "--graph", "petersen", "--order", "oracle", "--out", "json"])
    rep = Report.from_json(out.out)
    assert code == 0 and rep.solver_path == "oracle"
    assert rep.oracle["external_counts"] == {"-2": 5, "2": 5}


def test_solve_budget_exhausted(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch,
                    ["solve", "--graph", "petersen", "--order", "colouring", "--budget", "3", "--out", "json"])
    assert code == 3
    assert Report.from_json(out.out).status == "budget-exhausted"


def test_solve_dot(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["solve", "--graph", "k4", "--out", "dot"])
    assert code == 0
    assert out.out.count("fillcolor=black") == 2


def test_check_reports_without_failing(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["check", "--graph", "k4", "--x", "0", "--out", "json"])
    rep = Report.from_json(out.out)
    assert code == 0
    assert rep.report["is_external"] is False and rep.verified is False


def test_check_from_edge_list_stdin(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["check", "--format", "edgelist", "--x", "0,1", "--out", "json"],
                    emit_edge_list(gen.k4()))
    assert code == 0 and Report.from_json(out.out).verified


def test_input_errors(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["check", "--x", "0"], "C")[0] == 2
    assert run(capsys, monkeypatch, ["check", "--x", "0"], "Bw")[0] == 2  # triangle: not cubic
    assert run(capsys, monkeypatch, ["check", "--x", "9", "--graph", "k4"])[0] == 2
    assert run(capsys, monkeypatch, ["solve", "--graph", "nope"])[0] == 2
    assert run(capsys, monkeypatch, ["check", "--x", "0", "--input", "/nonexistent"])[0] == 2
    code, out = run(capsys, monkeypatch, ["check", "--format", "edgelist", "--x", "0"], "0 1\n1 x\n")
    assert code == 2 and "line 2" in out.err


def test_oracle_command(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["oracle", "--out", "json"], emit_graph6(gen.petersen()) + "\n")
    rep = Report.from_json(out.out)
    assert code == 0 and rep.oracle["external_bisection_exists"] is False


def test_decompose_command(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["decompose", "--graph", "petersen", "--out", "json"])
    rep = Report.from_json(out.out)
    assert code == 0
    assert rep.certificate["colouring"] is None
    assert rep.certificate["flows"]["4"] is None and rep.certificate["flows"]["5"]["k"] == 5


def test_sweep_command(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["sweep", "--max-n", "8", "--rooted-max-n", "6", "--out", "json"])
    assert code == 0 and json.loads(out.out)["failures"] == []


def test_survey_deterministic(capsys, monkeypatch):
    stream = "".join((DATA / f"cubic_connected_{n}.g6").read_text() for n in (4, 6, 8, 10))
    code1, out1 = run(capsys, monkeypatch, ["survey", "--out", "json"], stream)
    code2, out2 = run(capsys, monkeypatch, ["survey", "--out", "json"], stream)
    assert code1 == code2 == 0
    assert out1.out == out2.out
    lines = [json.loads(x) for x in out1.out.splitlines()]
    assert lines[-1]["summary"]["refutations"] == 0
    assert [r["index"] for r in lines[:-1]] == list(range(27))


def test_survey_flags_non_cubic(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["survey", "--out", "json"], "C~\nBw\n")
    assert code == 2
    assert json.loads(out.out.splitlines()[1])["status"] == "invalid"


def test_report_round_trip():
    rep = Report("solve", "C~", 4, solver_path="oracle", split={"X": [0, 1], "Y": [2, 3]},
                 report={"disc": 0}, verified=True, extra={"note": [1, 2]}, timing=0.5)
    assert Report.from_json(rep.to_json()) == rep
    with pytest.raises(ValueError):
        Report.from_dict({**rep.to_dict(), "schema": 2})
