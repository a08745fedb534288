"""Command-line entry point: ``ncpoisson VERB [options]``.

Verbs: example, bracket, homology, verify, hkr.  Exit status is 0 on success,
1 when a verification suite reports failures and 2 for usage or parse errors.
"""
import argparse
import json
import sys
from fractions import Fraction

from . import cobar, double_poisson, gerstenhaber, hkr
from .ainf import check_ainf_coalgebra, check_cyclic_pairing, parse_coalgebra_spec
from .errors import ComputationError, ParseError, UnknownGenerator
from .parser import parse_cochain, parse_form, parse_polyvector, parse_word
from .tensor import render_coeff

# Expected values of the worked counterexample on k^3.
HKR_EXPECTED = {
    "psi_inv_d_alpha": ("polyvector", "-x^2*z d/dz + x^2*y d/dy"),
    "psi_inv_d_beta": ("polyvector", "y*z d/dz - x*y d/dx"),
    "psi_inv_d_gamma": ("polyvector", "-z d/dy"),
    "{{a,b},c}": ("form", "x^2*y*z^2 dx - x^3*y*z dz"),
    "{a,{b,c}}": ("form", "-x^3*z^2 dy - x^3*y*z dz"),
    "{b,{a,c}}": ("form", "2*x^2*y*z^2 dx + 2*x^3*y*z dz"),
    "jacobiator": ("form", "3*x^2*y*z^2 dx + x^3*z^2 dy + 2*x^3*y*z dz"),
    "d(x^3*y*z^2)": ("form", "3*x^2*y*z^2 dx + x^3*z^2 dy + 2*x^3*y*z dz"),
}

COALGEBRA_SUITES = ["double-poisson", "cyclic-pairing", "ainf", "quillen", "periodic-exactness"]
COALGEBRA_SUITES += sorted(double_poisson.ALL_CHECKS) + sorted(gerstenhaber.SUITES)
SUITES = ["hkr-jacobiator", "hkr-properties", "jacobiator-exactness"] + COALGEBRA_SUITES


class UsageError(Exception):
    pass


# --- output helpers --------------------------------------------------------------

def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    if isinstance(x, Fraction):
        return render_coeff(x)
    return str(x)


def _emit(args, text_lines, payload, out):
    if args.format == "json":
        out.write(json.dumps(_jsonable(payload), indent=2, sort_keys=False) + "\n")
    else:
        for line in text_lines:
            out.write(line + "\n")


def _report_payload(rep):
    return {"identity": rep.name, "trials": rep.checked, "ok": rep.ok,
            "failures": rep.failures[:20]}


# --- verbs ------------------------------------------------------------------------

EXAMPLES = ["exterior:1", "exterior:2", "exterior:3", "exterior:4", "sklyanin3:1,2,3",
            "sklyanin4:2,3,-5/7", "yang_mills:2"]


def cmd_example(args, out):
    if not args.coalgebra:
        _emit(args, ["built-in examples (NAME:PARAMS):"] + ["  " + e for e in EXAMPLES],
              {"examples": EXAMPLES}, out)
        return 0
    C = _coalgebra(args)
    basis = [{"id": b.id, "degree": C.degrees[i], "weight": C.weights[i]}
             for i, b in enumerate(C.basis)]
    pairing = {f"{C.basis[i].id},{C.basis[j].id}": render_coeff(v)
               for (i, j), v in sorted(C.pairing.items())} if C.pairing else {}
    checks = [check_ainf_coalgebra(C)]
    if C.pairing is not None:
        checks.append(check_cyclic_pairing(C))
    lines = [f"coalgebra {args.coalgebra}  (pairing degree {C.pairing_degree})", "basis:"]
    lines += [f"  {b['id']}  degree {b['degree']}  weight {b['weight']}" for b in basis]
    lines.append("pairing: " + (", ".join(f"<{k}> = {v}" for k, v in pairing.items()) or "none"))
    lines += [f"{r.name}: {'ok' if r.ok else 'FAILED'} ({r.checked} checks)" for r in checks]
    _emit(args, lines, {"coalgebra": args.coalgebra, "basis": basis, "pairing": pairing,
                        "pairing_degree": C.pairing_degree,
                        "checks": [_report_payload(r) for r in checks]}, out)
    return 0 if all(r.ok for r in checks) else 1


def cmd_bracket(args, out):
    C = _coalgebra(args)
    if args.kind == "gerstenhaber":
        f, g = parse_cochain(args.lhs, C), parse_cochain(args.rhs, C)
        value = gerstenhaber.gerstenhaber_bracket(f, g)
    else:
        P = double_poisson.structure_for(C)
        r, q = parse_word(args.lhs, P.gens), parse_word(args.rhs, P.gens)
        fn = double_poisson.double_bracket if args.kind == "double" else double_poisson.loday_bracket
        value = fn(r, q)
    _emit(args, [str(value)], {"kind": args.kind, "lhs": args.lhs, "rhs": args.rhs,
                               "value": str(value)}, out)
    return 0


def cmd_homology(args, out):
    C = _coalgebra(args)
    if args.complex not in cobar.COMPLEXES:
        raise UsageError(f"unknown complex {args.complex!r}; choose from {', '.join(cobar.COMPLEXES)}")
    R = cobar.CobarAlgebra(C, max_degree=args.max_degree + 1, max_weight=args.max_weight)
    table = cobar.homology_table(R, args.complex, args.max_degree, args.max_weight)
    dims = {(b["weight"], b["degree"]): b["dim"] for b in table["blocks"]}
    header = "weight \\ degree " + " ".join(f"{k:>4}" for k in range(args.max_degree + 1))
    lines = [f"{args.complex} homology of {args.coalgebra}", header]
    for w in range(args.max_weight + 1):
        lines.append(f"{w:>15} " + " ".join(f"{dims[(w, k)]:>4}" for k in range(args.max_degree + 1)))
    _emit(args, lines, table, out)
    return 0


def _hkr_jacobiator(args):
    got = hkr.jacobiator_report()
    rows = []
    for key, (kind, text) in HKR_EXPECTED.items():
        parse = parse_polyvector if kind == "polyvector" else parse_form
        want = parse(text, 3)
        rows.append({"quantity": key, "value": str(got[key]), "expected": str(want),
                     "ok": got[key] == want})
    prim = got["primitive"]
    rows.append({"quantity": "primitive of jacobiator", "value": str(prim),
                 "expected": "x^3*y*z^2", "ok": prim is not None
                 and hkr.de_rham_d(prim) == got["jacobiator"]})
    from .ainf import Report
    rep = Report("hkr-jacobiator", checked=len(rows))
    for r in rows:
        if not r["ok"]:
            rep.fail(inputs=[r["quantity"]], lhs=r["value"], rhs=r["expected"])
    lines = ["alpha = x^2*y*z dx, beta = x*y*z dy, gamma = x*z dz on k^3"]
    lines += [f"{r['quantity']} = {r['value']}   [{'ok' if r['ok'] else 'MISMATCH'}]" for r in rows]
    return [rep], lines


def _run_suite(args):
    name = args.suite
    if name == "hkr-jacobiator":
        return _hkr_jacobiator(args)
    if name == "hkr-properties":
        return hkr.check_properties(args.trials, args.seed), []
    if name == "jacobiator-exactness":
        return hkr.check_jacobiator_exactness(args.trials, args.seed), []
    C = _coalgebra(args, default="exterior:2")
    if name == "double-poisson":
        return double_poisson.run_checks(C, list(double_poisson.AXIOM_CHECKS), args.trials, args.seed), []
    if name in double_poisson.ALL_CHECKS:
        return double_poisson.run_checks(C, [name], args.trials, args.seed), []
    if name in gerstenhaber.SUITES:
        import random
        return [gerstenhaber.SUITES[name](C, random.Random(f"{args.seed}:{name}"), args.trials)], []
    if name == "cyclic-pairing":
        return [check_cyclic_pairing(C)], []
    if name == "ainf":
        return [check_ainf_coalgebra(C)], []
    if name == "quillen":
        return cobar.check_quillen_identities(C, args.trials, args.seed), []
    if name == "periodic-exactness":
        from .ainf import Report
        R = cobar.CobarAlgebra(C, max_degree=args.max_degree, max_weight=args.max_weight)
        rep = Report("periodic-exactness")
        for w in range(args.max_weight + 1):
            for k in range(args.max_degree + 1):
                res = cobar.check_periodic_exactness(R, k, w)
                rep.checked += 1
                if not res["exact"]:
                    rep.fail(inputs=[f"degree {k}", f"weight {w}"], lhs=res, rhs="exact")
        return [rep], []
    raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")


def cmd_verify(args, out):
    reports, extra = _run_suite(args)
    lines = list(extra)
    lines += [f"{r.name}: {'PASS' if r.ok else 'FAIL'} ({r.checked} checks, {len(r.failures)} failures)"
              for r in reports]
    for r in reports:
        for f in r.failures[:3]:
            lines.append(f"  {r.name} failure: {f}")
    _emit(args, lines, {"suite": args.suite, "reports": [_report_payload(r) for r in reports]}, out)
    return 0 if all(r.ok for r in reports) else 1


HKR_OPS = {
    "d": (1, "form"), "psi": (1, "polyvector"), "psi-inverse": (1, "form"),
    "delta": (1, "polyvector"), "bracket": (2, "form"), "jacobiator": (3, "form"),
    "schouten": (2, "polyvector"), "contract": (2, "mixed"), "primitive": (1, "form"),
}


def cmd_hkr(args, out):
    arity, kind = HKR_OPS[args.op]
    if len(args.operands) != arity:
        raise UsageError(f"hkr {args.op} takes {arity} operand(s), got {len(args.operands)}")
    m = args.vars
    if kind == "mixed":
        xs = [parse_polyvector(args.operands[0], m), parse_form(args.operands[1], m)]
    else:
        parse = parse_form if kind == "form" else parse_polyvector
        xs = [parse(t, m) for t in args.operands]
    fn = {
        "d": hkr.de_rham_d, "psi": hkr.psi, "psi-inverse": hkr.psi_inverse,
        "delta": hkr.bv_delta, "bracket": hkr.hkr_bracket, "jacobiator": hkr.jacobiator,
        "schouten": hkr.schouten_bracket, "contract": hkr.contract,
        "primitive": hkr.exact_primitive,
    }[args.op]
    value = fn(*xs)
    if args.op == "primitive" and value is None:
        _emit(args, ["not exact"], {"op": args.op, "value": None}, out)
        return 1
    _emit(args, [str(value)], {"op": args.op, "operands": args.operands, "value": str(value)}, out)
    return 0


# --- argument handling --------------------------------------------------------------

def _coalgebra(args, default=None):
    spec = args.coalgebra or default
    if not spec:
        raise UsageError("--coalgebra NAME:PARAMS is required")
    args.coalgebra = spec
    try:
        return parse_coalgebra_spec(spec)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"cannot parse --coalgebra {spec!r}: {e}") from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--coalgebra", help="example as NAME:PARAMS, e.g. exterior:2 or sklyanin3:1,2,3")
    common.add_argument("--max-weight", type=int, default=6)
    common.add_argument("--max-degree", type=int, default=6)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=200)
    common.add_argument("--format", choices=["text", "json"], default="text")

    p = argparse.ArgumentParser(prog="ncpoisson",
                                description="Double Poisson brackets on cobar algebras and their invariants.")
    sub = p.add_subparsers(dest="verb", required=True)
    sub.add_parser("example", parents=[common], help="list examples or describe one")
    b = sub.add_parser("bracket", parents=[common], help="evaluate a bracket")
    b.add_argument("--lhs", required=True)
    b.add_argument("--rhs", required=True)
    b.add_argument("--kind", choices=["loday", "double", "gerstenhaber"], default="loday")
    h = sub.add_parser("homology", parents=[common], help="table of homology dimensions")
    h.add_argument("--complex", default="cyclic", help=", ".join(cobar.COMPLEXES))
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", required=True, help=", ".join(SUITES))
    k = sub.add_parser("hkr", parents=[common], help="polynomial forms and polyvector fields")
    k.add_argument("op", choices=sorted(HKR_OPS))
    k.add_argument("operands", nargs="*")
    k.add_argument("--vars", type=int, default=3, help="number of variables m")
    return p


COMMANDS = {"example": cmd_example, "bracket": cmd_bracket, "homology": cmd_homology,
            "verify": cmd_verify, "hkr": cmd_hkr}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return COMMANDS[args.verb](args, out)
    except (UsageError, ParseError, UnknownGenerator) as e:
        sys.stderr.write(f"ncpoisson {args.verb}: {e}\n")
        return 2
    except ComputationError as e:
        sys.stderr.write(f"ncpoisson {args.verb}: {type(e).__name__}: {e}\n")
        return 2


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
