"""Command-line front end.

    skewlin <subcommand> --ring F9:frob^1 --n 2 [--seed 42] [--samples 1000] [--in file]

Every subcommand prints one JSON document (``"schema": 1``) to stdout.
Exit codes: 0 success or all checks pass, 1 a check failed or the input is
outside the domain of the operation, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .elim import NotInvertible, monomialize
from .factorize import (
    MODES,
    PIVOT_RULES,
    FactorizationError,
    NotElementary,
    birkhoff_factorize,
    bruhat_factorize,
    gauss_factorize,
)
from .field import FieldError, make_instance, parse_ring_spec
from .k1 import k1_class, k1_structure
from .laurent import SkewLaurent, as_unit, degree_span, format_poly
from .matrix import build
from .parse import ParseError, looks_like_script, parse_matrix, parse_pairs, parse_reflections, parse_script, parse_scalar_poly
from .steinberg import Letter, NotAdmissible, find_universality_constants, k2_centrality_check, k2_element
from .verify import SUITES, run_verify
from .weyl import reduced_word, simple_roots, weyl_compose_split, weyl_length

SCHEMA = 1


class UsageError(Exception):
    pass


def _emit(obj, out):
    out.write(json.dumps({"schema": SCHEMA, **obj}, indent=2) + "\n")


def _read_input(args, required=True):
    if getattr(args, "infile", None):
        if args.infile == "-":
            return sys.stdin.read()
        with open(args.infile, encoding="utf-8") as fh:
            return fh.read()
    text = getattr(args, "expr", None)
    if text is None and required:
        raise UsageError("no input: pass an expression argument or --in FILE")
    return text


def _ops(ring, apps):
    return [a.describe(ring) for a in apps]


def _matrix_json(g):
    if g.witness:
        return {"script": _ops(g.ring, g.witness)}
    return {"entries": [[format_poly(f) for f in row] for row in g.rows]}


def _parse_element(text, n, ring):
    if looks_like_script(text):
        return build(ring, n, parse_script(text, n, ring))
    return parse_matrix(text, n, ring)


# -- subcommands -------------------------------------------------------------------------


def cmd_ring(args, ring):
    out = {
        "ring": str(parse_ring_spec(args.ring)),
        "order": ring.order,
        "tau_order": ring.tau_order,
        "k1": k1_structure(ring)["group"],
    }
    text = _read_input(args, required=False)
    if text is not None:
        f = parse_scalar_poly(text, ring)
        span = degree_span(f)
        out["poly"] = {
            "normalized": format_poly(f),
            "degree_span": None if span == "zero" else list(span),
            "is_unit": as_unit(f) is not None,
        }
    return out, True


def cmd_weyl(args, ring):
    roots = parse_reflections(_read_input(args), args.n)
    w = weyl_compose_split(args.n, roots)
    word = reduced_word(w)
    simple = simple_roots(args.n)
    return {
        "n": args.n,
        "perm": list(w.perm),
        "trans": list(w.trans),
        "length": weyl_length(w),
        "reduced_word": word,
        "reduced_word_roots": [str(simple[k]) for k in word],
    }, True


def cmd_factorize(args, ring):
    g = _parse_element(_read_input(args), args.n, ring)
    if args.mode == "monomial":
        left, mono, right = monomialize(g)
        ok = build(ring, args.n, left) * g * build(ring, args.n, right) == mono
        return {
            "mode": "monomial",
            "identity": "left * g * right = mono",
            "left_ops": _ops(ring, left),
            "mono": _matrix_json(mono),
            "right_ops": _ops(ring, right),
            "verified": ok,
        }, ok
    if args.mode == "gauss":
        fac = gauss_factorize(g, args.sign, args.rule)
        ok = fac.recompose() == g and fac.patterns_ok()
        return {
            "mode": "gauss",
            "sign": args.sign,
            "x_ops": _ops(ring, fac.x),
            "b_opposite": _matrix_json(fac.b_opp),
            "b_ops": _ops(ring, fac.b_same),
            "cell": fac.cell.as_dict(),
            "verified": ok,
        }, ok
    fn = bruhat_factorize if args.mode == "bruhat" else birkhoff_factorize
    fac = fn(g, args.sign, args.rule)
    ok = fac.recompose() == g and fac.patterns_ok()
    return {
        "mode": args.mode,
        "sign": args.sign,
        "left_ops": _ops(ring, fac.left),
        "weyl": {"perm": list(fac.cell.perm), "deg": list(fac.cell.trans)},
        "weyl_rep": _matrix_json(fac.weyl),
        "torus": [format_poly(fac.torus.rows[i][i]) for i in range(fac.n)],
        "right_ops": _ops(ring, fac.right),
        "cell": fac.cell.as_dict(),
        "verified": ok,
    }, ok


def cmd_k1(args, ring):
    out = {"structure": k1_structure(ring)}
    text = _read_input(args, required=False)
    if text is None:
        out["group"] = out["structure"]["group"]
        return out, True
    out.update(k1_class(_parse_element(text, args.n, ring)).as_dict())
    return out, True


def cmd_k2(args, ring):
    text = args.pairs if args.pairs is not None else _read_input(args)
    pairs = parse_pairs(text, ring)
    try:
        z = k2_element(ring, args.n, pairs)
    except NotAdmissible as err:
        return {"valid": False, "reason": str(err)}, False
    checked, ok = 0, True
    for i in range(1, args.n + 1):
        for j in range(1, args.n + 1):
            if i != j:
                good, _ = k2_centrality_check(z, Letter(i, j, SkewLaurent.one(ring)))
                ok &= good
                checked += 1
    phi_id = z.phi().is_identity()
    return {
        "valid": True,
        "pairs": [[format_poly(u), format_poly(v)] for u, v in z.pairs],
        "phi_is_identity": phi_id,
        "centrality_checked": checked,
        "centrality_ok": ok,
        "letters": len(z.word.letters),
    }, phi_id and ok


def cmd_constants(args, ring):
    c = find_universality_constants(ring)
    return c.as_dict(ring), True


def cmd_verify(args, ring):
    ok, reports = run_verify(args.suite, ring, args.n, args.samples, args.seed, corrupt=args.corrupt)
    return {"ok": ok, "seed": args.seed, "reports": reports}, ok


COMMANDS = {
    "ring": cmd_ring,
    "weyl": cmd_weyl,
    "factorize": cmd_factorize,
    "k1": cmd_k1,
    "k2": cmd_k2,
    "constants": cmd_constants,
    "verify": cmd_verify,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", default="F5", help="instance: F<p> | F<p>^<k>:frob^<e> | Q (default F5)")
    common.add_argument("--n", type=int, default=None, help="matrix rank (default 2; verify defaults to ranks 2-4)")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled suites")
    common.add_argument("--samples", type=int, default=None, help="draws per check")
    common.add_argument("--in", dest="infile", default=None, help="read the input expression from a file ('-' for stdin)")

    p = argparse.ArgumentParser(prog="skewlin", description="Linear groups over skew Laurent polynomial rings.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ring", parents=[common], help="describe an instance, optionally normalize a polynomial")
    s.add_argument("expr", nargs="?")
    s = sub.add_parser("weyl", parents=[common], help="compose reflections like 's(1,0) s(-theta,1)'")
    s.add_argument("expr", nargs="?")
    s = sub.add_parser("factorize", parents=[common], help="factor a matrix ('a,b;c,d') or generator script")
    s.add_argument("expr", nargs="?")
    s.add_argument("--mode", choices=MODES, default="bruhat")
    s.add_argument("--sign", choices=("+", "-"), default="+")
    s.add_argument("--rule", choices=PIVOT_RULES, default=PIVOT_RULES[0], help="pivot rule")
    s = sub.add_parser("k1", parents=[common], help="K1 structure, or the class of a matrix")
    s.add_argument("expr", nargs="?")
    s = sub.add_parser("k2", parents=[common], help="build a K2 element from symbol pairs")
    s.add_argument("expr", nargs="?")
    s.add_argument("--pairs", default=None, help="'(u,v);(u,v)'")
    sub.add_parser("constants", parents=[common], help="search universality constants a, b, c, d")
    s = sub.add_parser("verify", parents=[common], help="run seeded verification suites")
    s.add_argument("suite", choices=SUITES + ("all",))
    s.add_argument("--corrupt", action="store_true", help="negative control: corrupt the freeproduct oracle")
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.n is None and args.command != "verify":
            args.n = 2
        if args.n is not None and args.n < 2:
            raise UsageError("--n must be at least 2")
        ring = make_instance(args.ring)
        result, ok = COMMANDS[args.command](args, ring)
    except (UsageError, ParseError, FieldError, OSError) as err:
        _emit({"command": args.command, "error": str(err), "kind": type(err).__name__}, out)
        return 2
    except (NotElementary, NotInvertible, FactorizationError, NotAdmissible, ValueError, ArithmeticError) as err:
        _emit({"command": args.command, "error": str(err), "kind": type(err).__name__}, out)
        return 1
    _emit({"command": args.command, "ring": args.ring, **result}, out)
    return 0 if ok else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
