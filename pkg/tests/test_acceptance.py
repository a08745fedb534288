"""Acceptance criteria 1-10, one printed pass/fail line each.

Run with ``pytest tests/test_acceptance.py -s`` or ``python3 tests/test_acceptance.py``.

The degenerate Sklyanin point (1,1,1) named in criteria 2 and 9 has no cyclic
dual coalgebra: its quadratic dual does not stop in degree 3.  Those parts are
kept as strict xfail tests, and the criterion lines report them as FAIL.
"""
import random
import sys
import time

import pytest

from ncpoisson import hkr
from ncpoisson.ainf import (check_ainf_coalgebra, check_cyclic_pairing, exterior_coalgebra,
                            parse_coalgebra_spec, quadratic_koszul_dual)
from ncpoisson.cobar import CobarAlgebra, check_periodic_exactness, check_quillen_identities, homology_dim
from ncpoisson.double_poisson import run_checks
from ncpoisson.errors import BadParameters
from ncpoisson.gerstenhaber import check_bracket_transport, summand_count

EXAMPLES = ["exterior:1", "exterior:2", "exterior:3", "exterior:4", "sklyanin3:1,2,3",
            "sklyanin3:0,1,1", "sklyanin4:2,3,-5/7", "yang_mills:2"]
SKLYANIN3 = ["sklyanin3:1,2,3", "sklyanin3:0,1,1"]
DEGENERATE = "sklyanin3:1,1,1"

_coalgebras = {}


def coalgebra(spec):
    if spec not in _coalgebras:
        _coalgebras[spec] = parse_coalgebra_spec(spec)
    return _coalgebras[spec]


def degenerate_blocked():
    """Reason the degenerate point cannot be checked, or None if it builds."""
    try:
        coalgebra(DEGENERATE)
    except BadParameters as e:
        return f"{DEGENERATE} has no cyclic dual coalgebra ({e})"
    return None


def failures(reports):
    return [(r.name, r.failures[:1]) for r in reports if not r.ok]


def line(n, ok, detail):
    return f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"


# --- criteria ----------------------------------------------------------------------

def criterion_1():
    start = time.perf_counter()
    rep = hkr.jacobiator_report()
    F, V = hkr.PolyForm, hkr.PolyVector
    want = {
        "psi_inv_d_alpha": V(3, {((2, 0, 1), (2,)): -1, ((2, 1, 0), (1,)): 1}),
        "{{a,b},c}": F(3, {((2, 1, 2), (0,)): 1, ((3, 1, 1), (2,)): -1}),
        "{a,{b,c}}": F(3, {((3, 0, 2), (1,)): -1, ((3, 1, 1), (2,)): -1}),
        "{b,{a,c}}": F(3, {((2, 1, 2), (0,)): 2, ((3, 1, 1), (2,)): 2}),
        "jacobiator": F(3, {((2, 1, 2), (0,)): 3, ((3, 0, 2), (1,)): 1, ((3, 1, 1), (2,)): 2}),
    }
    bad = [k for k, v in want.items() if rep[k] != v]
    if rep["jacobiator"] != hkr.de_rham_d(F(3, {((3, 1, 2), ()): 1})):
        bad.append("d(x^3*y*z^2)")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 1
    return ok, f"golden values {'match' if not bad else 'differ: ' + ', '.join(bad)}, {elapsed:.2f}s", []


def criterion_2():
    start = time.perf_counter()
    bad = []
    for spec in ["exterior:2", "exterior:3"] + SKLYANIN3:
        reps = run_checks(coalgebra(spec), ["antisymmetry", "derivation", "jacobi"],
                          trials=200, seed=0, max_len=4)
        bad += [(spec, f) for f in failures(reps)]
    elapsed = time.perf_counter() - start
    blocked = [degenerate_blocked()] if degenerate_blocked() else []
    ok = not bad and elapsed < 120
    detail = (f"3 axioms x 200 trials on exterior(2), exterior(3) and sklyanin3 at (1,2,3), (0,1,1): "
              f"{len(bad)} failures, {elapsed:.1f}s")
    return ok, detail, blocked


def criterion_3():
    bad = []
    for spec in EXAMPLES:
        bad += [(spec, f) for f in failures(run_checks(coalgebra(spec), ["d-compatibility"], trials=200))]
    return not bad, f"200 trials on each of {len(EXAMPLES)} examples: {len(bad)} failing", []


def criterion_4():
    bad, count = [], 0
    for spec in EXAMPLES:
        reps = check_quillen_identities(coalgebra(spec), trials=200, seed=0)
        count = len(reps)
        bad += [(spec, f) for f in failures(reps)]
    return not bad, f"{count} identities x 200 inputs on {len(EXAMPLES)} examples: {len(bad)} failing", []


def criterion_5():
    bad = []
    for spec in ["exterior:2"] + SKLYANIN3:
        bad += [(spec, f) for f in failures(run_checks(coalgebra(spec), ["lie-morphism"], trials=200))]
    return not bad, f"200 trials on exterior(2) and sklyanin3 at (1,2,3), (0,1,1): {len(bad)} failing", []


def criterion_6():
    bad = []
    for spec in ["exterior:2", "exterior:3"] + SKLYANIN3:
        rep = check_bracket_transport(coalgebra(spec), random.Random(f"0:{spec}"), trials=100, max_len=3)
        if not rep.ok:
            bad.append((spec, rep.failures[:1]))
    counts = []
    for n in range(1, 5):
        for m in range(1, 5):
            lhs, rhs, same = summand_count(n, m)
            counts.append(lhs == rhs == m * n * (m + n - 2) and same)
    ok = not bad and all(counts)
    return ok, f"100 trials on 4 coalgebras: {len(bad)} failing; summand counts {sum(counts)}/{len(counts)}", []


def criterion_7():
    bad, blocks = [], 0
    for spec in ["exterior:1", "exterior:2"]:
        R = CobarAlgebra(coalgebra(spec), max_degree=5, max_weight=4)
        for w in range(5):
            for k in range(5):
                blocks += 1
                if not check_periodic_exactness(R, k, w)["exact"]:
                    bad.append((spec, k, w))
    return not bad, f"{blocks} blocks, {len(bad)} not exact", []


def criterion_8():
    R1 = CobarAlgebra(exterior_coalgebra(1), max_degree=5, max_weight=5)
    bad = []
    for w in range(1, 6):
        hh = [homology_dim(R1, "hochschild", k, w) for k in range(4)]
        hc = [homology_dim(R1, "cyclic", k, w) for k in range(4)]
        if hh != [1, 1, 0, 0] or hc != [1, 0, 0, 0]:
            bad.append(("exterior:1", w, hh, hc))
    sym = quadratic_koszul_dual(2, [{(0, 1): 1, (1, 0): -1}], cutoff=4)
    ext = exterior_coalgebra(2)
    if sym.dims_by_degree() != [1, 2, 1] or ext.dims_by_degree() != [1, 2, 1]:
        bad.append(("dims", sym.dims_by_degree()))
    Rs, Re = CobarAlgebra(sym, max_degree=4, max_weight=4), CobarAlgebra(ext, max_degree=4, max_weight=4)
    for kind in ("hochschild", "cyclic"):
        for w in range(4):
            for k in range(4):
                if homology_dim(Rs, kind, k, w) != homology_dim(Re, kind, k, w):
                    bad.append((kind, k, w))
    return not bad, f"k[x] HH/HC and Sym dual dims (1,2,1): {len(bad)} mismatches", []


def criterion_9():
    specs = ["exterior:1", "exterior:2", "exterior:3", "exterior:4", "sklyanin4:2,3,-5/7", "yang_mills:2"]
    bad = [s for s in specs if not check_cyclic_pairing(coalgebra(s)).ok]
    ym = check_ainf_coalgebra(coalgebra("yang_mills:2"))
    if not ym.ok:
        bad.append("A-infinity yang_mills:2")
    blocked = [degenerate_blocked()] if degenerate_blocked() else []
    detail = f"pairing on exterior(1..4), sklyanin4(2,3,-5/7), yang_mills(2) and A-infinity on yang_mills(2): {len(bad)} failing"
    return not bad, detail, blocked


def criterion_10():
    reps = hkr.check_jacobiator_exactness(trials=100, seed=0, ms=(2, 3))
    return all(r.ok for r in reps), "; ".join(f"{r.name} {r.checked - len(r.failures)}/{r.checked}" for r in reps), []


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def evaluate(n):
    """(printed line, attainable parts ok)."""
    ok, detail, blocked = CRITERIA[n - 1]()
    if blocked:
        detail += "; not attainable: " + "; ".join(blocked)
    return line(n, ok and not blocked, detail), ok


# --- pytest entry points ---------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(n, capsys):
    text, ok = evaluate(n)
    with capsys.disabled():
        print("\n" + text)
    assert ok, text


@pytest.mark.xfail(strict=True, raises=BadParameters,
                   reason="sklyanin3(1,1,1) is degenerate: the quadratic dual has dims 1,3,3,3,3,...")
def test_degenerate_sklyanin_axioms():
    reps = run_checks(coalgebra(DEGENERATE), ["antisymmetry", "derivation", "jacobi"], trials=200)
    assert all(r.ok for r in reps)


@pytest.mark.xfail(strict=True, raises=BadParameters,
                   reason="sklyanin3(1,1,1) is degenerate: the quadratic dual has dims 1,3,3,3,3,...")
def test_degenerate_sklyanin_pairing():
    assert check_cyclic_pairing(coalgebra(DEGENERATE)).ok


def sklyanin_relations(a, b, c):
    """a yz + b zy + c x^2 and its cyclic shifts, over x, y, z = 0, 1, 2."""
    return [{(1, 2): a, (2, 1): b, (0, 0): c}, {(2, 0): a, (0, 2): b, (1, 1): c},
            {(0, 1): a, (1, 0): b, (2, 2): c}]


def test_degenerate_sklyanin_dual_does_not_terminate():
    # independent route to the obstruction: the Koszul dual computed from the algebra's own relations
    assert quadratic_koszul_dual(3, sklyanin_relations(1, 1, 1), cutoff=4).dims_by_degree() == [1, 3, 3, 3, 3]
    assert quadratic_koszul_dual(3, sklyanin_relations(1, 2, 3), cutoff=4).dims_by_degree() == [1, 3, 3, 1]


if __name__ == "__main__":
    all_ok = True
    for n in range(1, 11):
        text, _ = evaluate(n)
        all_ok &= " PASS " in text
        print(text, flush=True)
    sys.exit(0 if all_ok else 1)
