import json

import pytest

import figures as fig
from rsqsym.cli import run
from rsqsym.compositions import format_composition
from rsqsym.qsym import parse_matrix_csv


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_expand_pretty(capsys):
    code, out, _ = _run(capsys, "expand", "--family", "rs", "--index", "1,3", "--basis", "F")
    assert code == 0 and out == "RS(1,3) = F(2,1,1) + F(1,2,1)\n"
    code, out, _ = _run(capsys, "expand", "--family", "schur", "--index", "2,1", "--basis", "M")
    assert code == 0 and out == "s(2,1) = M(2,1) + M(1,2) + 2*M(1,1,1)\n"


def test_expand_json(capsys):
    code, out, _ = _run(capsys, "expand", "--family", "qs", "--index", "1,3", "--basis", "F", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["basis"] == "F" and data["degree"] == 4
    assert data["terms"] == [{"parts": [1, 3], "coeff": 1}, {"parts": [2, 2], "coeff": 1}]


def test_matrix_csv_matches_printed_table(capsys):
    order = ";".join(format_composition(a) for a in fig.N4_ORDER)
    code, out, _ = _run(capsys, "matrix", "--from", "RS", "--to", "QS", "-n", "4",
                        "--rows", order, "--cols", order, "--format", "csv")
    assert code == 0
    rows, cols, entries = parse_matrix_csv(out)
    assert rows == fig.N4_ORDER and cols == fig.N4_ORDER and entries == fig.FIG_QS2DQS
    code, default, _ = _run(capsys, "matrix", "--from", "RS", "--to", "QS", "-n", "4", "--format", "csv")
    assert default == out


def test_matrix_json_and_pretty(capsys):
    code, out, _ = _run(capsys, "matrix", "--from", "F", "--to", "M", "-n", "2", "--format", "json")
    assert code == 0 and json.loads(out)["entries"] == [[1, 1], [0, 1]]
    code, out, _ = _run(capsys, "matrix", "--from", "F", "--to", "M", "-n", "2")
    assert out.splitlines()[0].split() == ["F\\M", "2", "11"]


def test_tableaux(capsys):
    code, out, _ = _run(capsys, "tableaux", "--shape", "2,1,2,1", "--max-entry", "4", "--count")
    assert code == 0 and out.strip() == "7"
    code, out, _ = _run(capsys, "tableaux", "--shape", "1,3", "--standard")
    assert out.split("\n\n")[0].strip().splitlines()[0] == "1"
    code, out, _ = _run(capsys, "tableaux", "--shape", "2,1", "--kind", "csct", "--format", "json")
    assert all(t["kind"] == "CSCT" for t in json.loads(out))


def test_insert_trace(capsys):
    code, out, _ = _run(capsys, "insert", "--rows", "2,1/2/4,3,2/4,2/5,2", "-x", "3")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "3 -> 0 0 2 0 0 1 0 3 2 2 2 2 4 4 5"
    assert "3 -> 2 2 2 2 4 4 5" in lines
    assert lines[-1] == "path: (4,2) (5,2) (6,2) (3,1)"
    code, out, _ = _run(capsys, "insert", "--rows", "2,1/2/4,3,2/4,2/5,2", "-x", "3", "--format", "json")
    assert json.loads(out)["result"]["rows"] == fig.FIG_SCHENSTED_RESULT


def test_bijection_trace(capsys):
    code, out, err = _run(capsys, "bijection", "--map", "rho", "--rows", "7,6,5,4,2/7,5,3,1/6,4,2,1/2")
    assert code == 0 and err == ""
    assert out.rstrip().endswith("2\n6 5 3 1\n7 6 5 4 2\n7 4 2 1")
    code, out, err = _run(capsys, "bijection", "--map", "phi", "--rows", "2,1,1/4/5,5,5,3,1/6,3,2,2",
                          "--format", "json")
    assert "warning" in err
    assert json.loads(out)["output"]["rows"] == fig.FIG_CONJ_PHI


def test_verify(capsys):
    code, out, _ = _run(capsys, "verify", "all", "-n", "3")
    assert code == 0
    assert len(out.splitlines()) == 12 and all(line.startswith("PASS") for line in out.splitlines())
    code, out, _ = _run(capsys, "verify", "omega", "-n", "2", "--format", "json")
    assert [r["degree"] for r in json.loads(out)] == [1, 2]


@pytest.mark.parametrize("argv", [
    ["expand", "--family", "rs", "--index", "1,x"],
    ["expand", "--family", "schur", "--index", "1,2"],
    ["expand", "--family", "rs", "--index", "1", "--basis", "QS"],
    ["expand", "--family", "rs", "--index", "1", "--format", "csv"],
    ["matrix", "--from", "F", "--to", "M", "-n", "-1"],
    ["matrix", "--from", "F", "--to", "M", "-n", "2", "--rows", "2"],
    ["tableaux", "--shape", "2", "--max-entry", "0"],
    ["insert", "--rows", "1,2", "-x", "1"],
    ["insert", "--rows", "1", "-x", "0"],
    ["bijection", "--map", "rho", "--rows", "1,3"],
    ["verify", "omega", "-n", "0"],
    ["nonsense"],
])
def test_usage_errors(capsys, argv):
    code, out, err = _run(capsys, *argv)
    assert code == 2 and out == "" and err


def test_deterministic_and_cached(capsys, tmp_path):
    cache = str(tmp_path / "c.json")
    argv = ["--cache", cache, "expand", "--family", "rs", "--index", "2,1,2,1", "--basis", "M", "--format", "json"]
    first = _run(capsys, *argv)
    second = _run(capsys, *argv)
    assert first == second and first[0] == 0
    saved = json.loads((tmp_path / "c.json").read_text())
    assert any((r["family"], r["basis"], r["index"]) == ("RS", "M", [2, 1, 2, 1]) for r in saved)
