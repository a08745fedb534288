import io
import json

import pytest

from ncpoisson.ainf import exterior_coalgebra
from ncpoisson.cli import SUITES, main
from ncpoisson.cobar import CobarAlgebra, homology_dim


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_verify_hkr_jacobiator():
    code, text = run("verify", "--suite", "hkr-jacobiator")
    assert code == 0
    assert "{{a,b},c} = x^2*y*z^2 dx - x^3*y*z dz" in text
    assert "{a,{b,c}} = -x^3*z^2 dy - x^3*y*z dz" in text
    assert "{b,{a,c}} = 2*x^2*y*z^2 dx + 2*x^3*y*z dz" in text
    assert "d(x^3*y*z^2) = 3*x^2*y*z^2 dx + x^3*z^2 dy + 2*x^3*y*z dz" in text
    assert "MISMATCH" not in text and "hkr-jacobiator: PASS" in text


def test_homology_table_matches_library():
    code, text = run("homology", "--coalgebra", "exterior:1", "--complex", "cyclic",
                     "--max-weight", "5", "--max-degree", "3", "--format", "json")
    assert code == 0
    table = json.loads(text)
    R = CobarAlgebra(exterior_coalgebra(1), max_degree=4, max_weight=5)
    blocks = table["blocks"]
    assert len(blocks) == 6 * 4
    for b in blocks:
        assert b["dim"] == homology_dim(R, "cyclic", b["degree"], b["weight"])


def test_homology_text_table():
    code, text = run("homology", "--coalgebra", "exterior:1", "--max-weight", "2", "--max-degree", "1")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "cyclic homology of exterior:1"
    assert lines[-1].split() == ["2", "1", "0"]


def test_bracket_with_unit_is_zero():
    code, text = run("bracket", "--coalgebra", "exterior:2", "--lhs", "[s^-1 m(v1)]", "--rhs", "1")
    assert (code, text.strip()) == (0, "0")


def test_bracket_kinds():
    code, text = run("bracket", "--coalgebra", "exterior:2", "--lhs", "[m(v1)]", "--rhs", "[m(v2)]",
                     "--kind", "double")
    assert (code, text.strip()) == (0, "1 (x) 1")
    code, text = run("bracket", "--coalgebra", "exterior:1", "--lhs", "( ; e)",
                     "--rhs", "(m(v1) ; m(v1))", "--kind", "gerstenhaber")
    assert code == 0 and text.strip()


def test_example_listing_and_description():
    code, text = run("example")
    assert code == 0 and "exterior:2" in text
    code, text = run("example", "--coalgebra", "sklyanin3:1,2,3", "--format", "json")
    data = json.loads(text)
    assert code == 0 and all(c["ok"] for c in data["checks"])
    assert len(data["basis"]) == 8


def test_hkr_verb():
    assert run("hkr", "d", "x^3*y*z^2") == (0, "3*x^2*y*z^2 dx + x^3*z^2 dy + 2*x^3*y*z dz\n")
    assert run("hkr", "schouten", "d/dx", "d/dy") == (0, "0\n")
    assert run("hkr", "primitive", "y dx") == (1, "not exact\n")
    assert run("hkr", "delta", "x1 d/dx1", "--vars", "4") == (0, "1\n")


@pytest.mark.parametrize("suite", ["double-poisson", "quillen", "ainf", "cyclic-pairing",
                                   "bracket-transport", "jacobiator-exactness", "periodic-exactness"])
def test_verify_suites_pass(suite):
    code, text = run("verify", "--suite", suite, "--trials", "10", "--max-weight", "3",
                     "--max-degree", "3")
    assert code == 0, text
    assert "FAIL" not in text


def test_verify_json():
    code, text = run("verify", "--suite", "jacobi", "--coalgebra", "exterior:3", "--trials", "5",
                     "--format", "json")
    data = json.loads(text)
    assert code == 0 and data["reports"][0]["ok"] and data["reports"][0]["trials"] == 5


def test_verify_failure_exit_code(monkeypatch):
    from ncpoisson import hkr
    from ncpoisson.ainf import Report

    def broken(trials, seed):
        rep = Report("hkr-properties", checked=1)
        rep.fail(inputs=["x"], lhs="1", rhs="0")
        return [rep]

    monkeypatch.setattr(hkr, "check_properties", broken)
    code, text = run("verify", "--suite", "hkr-properties")
    assert code == 1 and "FAIL" in text
    assert "hkr-properties" in SUITES


@pytest.mark.parametrize("argv", [
    ["bracket", "--coalgebra", "exterior:2", "--lhs", "[v1 | ]", "--rhs", "1"],
    ["bracket", "--coalgebra", "exterior:2", "--lhs", "[m(v9)]", "--rhs", "1"],
    ["verify", "--suite", "nope"],
    ["homology", "--coalgebra", "exterior:1", "--complex", "nope"],
    ["homology", "--coalgebra", "nope:1"],
    ["homology"],
    ["hkr", "d", "x", "y"],
    ["example", "--coalgebra", "sklyanin3:1,1,1"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
