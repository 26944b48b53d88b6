import io

import pytest

from covext.cli import main, solve
from covext.problem import ProblemError, parse_problem
from covext.witness import verify_witness

TORUS_INF = "surface orientable g=1 k=1\nn inf\nspec inf:inf\n"
TRIPLE = "surface orientable g=0 k=3\nn inf\nspec inf:1, 1:inf\nspec inf:1, 1:inf\nspec 2:1, 1:inf\n"


def run(*argv):
    out = io.StringIO()
    return main(list(argv), out), out.getvalue()


@pytest.fixture
def problem(tmp_path):
    def write(text, name="p.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def test_parse_examples():
    p = parse_problem("surface orientable g=1 k=1\nn 5\nclass 5\n")
    assert p.degree == 5 and p.classes[0].parts == (5,)
    p = parse_problem("surface orientable g=0 k=2\nn inf\nspec inf:1\nspec inf:1\n")
    assert p.infinite and len(p.specs) == 2
    p = parse_problem("# comment\nsurface nonorientable g=2 k=1  # trailing\nn 6\nclass 2,2\nconnected\n"
                      "regular relaxed\nseed 4\nbudget 99\nwindow 8\n")
    assert p.classes[0].parts == (2, 2, 1, 1) and p.connected and p.regular == "relaxed"
    assert (p.seed, p.budget, p.window) == (4, 99, 8)


@pytest.mark.parametrize("text,code,line,col", [
    ("surface orientable g=1 k=1\nn 4\nclass 5\n", "E-DEGREE", 3, 7),
    ("surface orientable g=1 k=1\nn 4\nspec inf:1\n", "E-DEGREE", 3, 6),
    ("surface orientable g=0 k=1\nn inf\nclass 2\n", "E-DEGREE", 3, 7),
    ("surface orientable g=1 k=2\nn 4\nclass 2\n", "E-ARITY", 3, 1),
    ("surface orientable g=1 k=1\nn 4\nclass 2\nclass 2\n", "E-ARITY", 4, 1),
    ("surface orientable g=1 k=1\nclass 2\n", "E-ARITY", 2, 1),
    ("n 4\nclass 2\n", "E-ARITY", 2, 1),
    ("surface orientable g=1 k=1\nn 4\n  frobnicate\n", "E-SYNTAX", 3, 3),
    ("surface sphere g=1 k=1\n", "E-SYNTAX", 1, 9),
    ("surface orientable g=1 k=1\nn four\n", "E-VALUE", 2, 3),
    ("surface orientable g=1 k=1\nn 4\nclass 2 x\n", "E-SYNTAX", 3, 7),
    ("surface orientable g=0 k=1\nn inf\nspec 2:\n", "E-SYNTAX", 3, 6),
    ("surface orientable g=1 k=1\nn 4\nclass 2\nregular loose\n", "E-SYNTAX", 4, 9),
])
def test_parse_errors(text, code, line, col):
    with pytest.raises(ProblemError) as info:
        parse_problem(text)
    assert (info.value.code, info.value.line, info.value.column) == (code, line, col)


@pytest.mark.parametrize("text,status,code", [
    (TORUS_INF, "Extends", 0),
    (TRIPLE, "NotExtends", 1),
    ("surface orientable g=0 k=3\nn inf\nspec inf:1\nspec inf:1\nspec 3:1, 1:inf\n", "Unknown", 2),
    ("surface orientable g=0 k=2\nn inf\nspec inf:1\nspec inf:1\nconnected\n", "Extends", 0),
    ("surface orientable g=0 k=2\nn inf\nspec 2:inf\nspec 3:inf\n", "NotExtends", 1),
    ("surface orientable g=0 k=3\nn 3\nclass 3\nclass 3\nclass 3\n", "Extends", 0),
    ("surface orientable g=0 k=3\nn 3\nclass 2\nclass 1\nclass 1\n", "NotExtends", 1),
    ("surface orientable g=2 k=2\nn 4\nclass 2\nclass 1\n", "NotExtends", 1),
    ("surface orientable g=1 k=1\nn 4\nclass 4\nregular relaxed\n", "NotExtends", 1),
    ("surface nonorientable g=2 k=1\nn 5\nclass 3\nconnected\n", "Extends", 0),
])
def test_decide(problem, text, status, code):
    rc, out = run("decide", problem(text))
    assert rc == code
    assert f"status: {status}" in out


def test_decide_writes_verifiable_witness(problem, tmp_path):
    w = tmp_path / "w.txt"
    rc, out = run("decide", problem(TORUS_INF), "--witness", str(w))
    assert rc == 0 and "reason: ore-transitive" in out
    assert run("verify", str(w)) == (0, "OK: witness verified\n")
    data = w.read_bytes()
    i = data.index(b"SHIFT(1)") + 6
    w.write_bytes(data[:i] + b"2" + data[i + 1:])
    rc, out = run("verify", str(w))
    assert rc == 1 and "checksum mismatch" in out


def test_witness_command_is_deterministic(problem):
    path = problem(TORUS_INF)
    first = run("witness", path, "--seed", "2")
    assert first == run("witness", path, "--seed", "2")
    assert first[0] == 0 and verify_witness(first[1]) == []
    assert run("witness", problem(TRIPLE))[0] == 1


def test_input_errors(problem, capsys):
    assert run("decide", problem("surface orientable g=1 k=1\nn 4\nclass 5\n"))[0] == 3
    assert "E-DEGREE" in capsys.readouterr().err
    assert run("decide", "/nonexistent/problem")[0] == 3
    assert run("frobnicate")[0] == 3
    assert run("decide", problem("surface orientable g=1 k=0\nn 4\n"))[0] == 3
    assert run("count", problem(TORUS_INF))[0] == 3
    assert run("ore")[0] == 3
    assert run("ore", "--perm", "(1 9)", "-n", "3")[0] == 3
    assert run("regular")[0] == 3


def test_budget_exhausted(problem):
    text = "surface orientable g=0 k=3\nn 6\nclass 2\nclass 5\nclass 6\nconnected\n"
    assert run("decide", problem(text), "--budget", "1")[0] == 4


def test_count(problem):
    rc, out = run("count", problem("surface orientable g=0 k=3\nn 3\nclass 3\nclass 3\nclass 3\n"))
    assert (rc, out.strip()) == (0, "2")


def test_ore_commands():
    rc, out = run("ore", "--perm", "(1 2 3)", "-n", "3")
    assert rc == 0 and out.startswith("alpha:")
    assert run("ore", "--perm", "(1 2)", "-n", "3")[0] == 1
    assert run("ore", "--perm", "(1 2 3 4 5)", "-n", "5", "--transitive")[0] == 0
    rc, out = run("ore", "--spec", "inf:2, 4:5", "--window", "8")
    assert rc == 0 and "commutator check on radius 8: pass" in out
    assert run("ore", "--spec", "1:inf", "--trivial")[0] == 0
    assert run("ore", "--spec", "bogus")[0] == 3


def test_build_strip():
    rc, out = run("build-strip", "--sigma", "(1 2 3)", "--tau", "(1 2)", "-n", "3")
    assert rc == 0 and "euler characteristic: -3" in out


def test_regular_command(problem, tmp_path):
    assert run("regular", "--regq", "1", "4")[0] == 0
    path = problem("surface orientable g=0 k=2\nn 4\nclass 4\nclass 4\n")
    w = tmp_path / "r.txt"
    rc, out = run("regular", path, "--witness", str(w))
    assert rc == 0 and "regular-strict" in out
    assert run("verify", str(w))[0] == 0
    assert run("regular", problem("surface orientable g=1 k=1\nn 4\nclass 4\n"), "--relaxed")[0] == 1


def test_solve_direct():
    res = solve(parse_problem(TORUS_INF))
    assert res.status == "Extends" and res.witness.startswith("covext-witness 1\n")
    res = solve(parse_problem("surface orientable g=2 k=2\nn inf\nspec inf:1\nspec 2:inf\n"))
    assert res.witness is None and res.notes == ["existence only, no witness"]
