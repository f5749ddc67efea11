import json

import pytest

from nearfactor.cli import main
from nearfactor.criticality import is_nfc_by_definition, is_nfc_by_theorem
from nearfactor.graph import parse_graph, serialize_graph, disjoint_union, generate

TWO_TRIANGLES = "6 6\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n"


@pytest.fixture
def tri_file(tmp_path):
    p = tmp_path / "two-triangles.g"
    p.write_text(TWO_TRIANGLES)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_nfc(capsys, tri_file):
    code, out, _ = run(capsys, "check", "nfc", tri_file)
    assert code == 0
    assert out == "nfc: holds [theorem] two-factor-critical-components\n"


def test_check_perfect_with_witness(capsys, tri_file):
    code, out, _ = run(capsys, "check", "perfect", tri_file)
    assert code == 1 and "S=" not in out
    code, out, _ = run(capsys, "check", "perfect", tri_file, "--witness")
    assert code == 1
    assert "witness: tutte-set S=∅, odd components 2" in out


@pytest.mark.parametrize("route", ["definition", "theorem"])
def test_json_matches_library(capsys, tri_file, route):
    code, out, _ = run(capsys, "check", "nfc", tri_file, "--route", route, "--json")
    g = parse_graph(TWO_TRIANGLES)
    lib = (is_nfc_by_definition if route == "definition" else is_nfc_by_theorem)(g)
    assert code == 0
    assert json.loads(out) == json.loads(json.dumps(lib.to_dict()))


def test_check_other_properties(capsys, tmp_path):
    p = tmp_path / "c5.g"
    p.write_text(serialize_graph(generate("cycle", 5)))
    assert run(capsys, "check", "factor-critical", str(p))[0] == 0
    assert run(capsys, "check", "near-factor", str(p))[0] == 0
    assert run(capsys, "check", "nfc", str(p))[0] == 1
    assert run(capsys, "check", "factor-critical", str(p), "--route", "theorem")[0] == 2


def test_match(capsys, tri_file):
    code, out, _ = run(capsys, "match", tri_file)
    assert code == 0 and out == "0 1\n3 4\n"


def test_tutte(capsys, tri_file, tmp_path):
    code, out, _ = run(capsys, "tutte", tri_file, "--json")
    assert code == 1 and json.loads(out) == {"s": [], "odd_count": 2}
    k4 = tmp_path / "k4.g"
    k4.write_text(serialize_graph(generate("complete", 4)))
    assert run(capsys, "tutte", str(k4))[0] == 0
    code, _, err = run(capsys, "tutte", tri_file, "--max-n", "5")
    assert code == 2 and "bound" in err


def test_gen_round_trip(capsys):
    code, out, _ = run(capsys, "gen", "cycle", "3")
    assert code == 0 and parse_graph(out) == generate("cycle", 3)
    _, a, _ = run(capsys, "gen", "random", "10", "--p", "0.5", "--seed", "42")
    _, b, _ = run(capsys, "gen", "random", "10", "--p", "0.5", "--seed", "42")
    assert a == b


def test_verify(capsys, tmp_path):
    csv_path = tmp_path / "counts.csv"
    code, out, err = run(capsys, "verify", "--max-n", "5", "--csv", str(csv_path))
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert lines[0] == "order,graphs_checked,nfc_count,factor_critical_count,perfect_matching_count,mismatch_count"
    assert all(line.endswith(",0") for line in lines[1:])
    assert csv_path.read_text() == out


def test_verify_random(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "8", "--mode", "random", "--count", "40", "--seed", "3")
    assert code == 0
    assert sum(int(line.split(",")[1]) for line in out.splitlines()[1:]) == 40


def test_verify_bound(capsys):
    assert run(capsys, "verify", "--max-n", "8")[0] == 2


def test_oracle(capsys, tri_file):
    code, out, _ = run(capsys, "oracle", tri_file)
    assert code == 0
    assert "matchings: 16" in out and "perfect: false" in out


@pytest.mark.parametrize(
    "argv",
    [["frobnicate"], ["check", "nfc", "/nonexistent/file.g"], ["check", "bogus", "x"], ["verify"]],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_malformed_graph(capsys, tmp_path):
    p = tmp_path / "bad.g"
    p.write_text("2 1\n0 0\n")
    code, _, err = run(capsys, "check", "nfc", str(p))
    assert code == 2 and "self-loop" in err


def test_stdin(capsys, monkeypatch):
    import io
    import sys

    g = disjoint_union(generate("cycle", 4), generate("complete", 2))
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(serialize_graph(g).encode())))
    code, out, _ = run(capsys, "check", "nfc", "-")
    assert code == 0 and "all-even-components" in out
