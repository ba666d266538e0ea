"""Command-line interface.

One subcommand per capability; results go to stdout as single-line JSON
(except `list`/`sample`, which stream one encoding per line, and
`constant`, which defaults to CSV).  Exit codes: 0 success, 2 usage,
3 domain error, 4 resource guard refused the request (pass --unsafe to
override a guard where the flag is offered).

With FORMULA_FORGE_CACHE set, count tables are loaded from that path on
startup and written back after a successful run, so repeated invocations
share work.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

import mpmath

from . import __version__
from .asymptotics import constant_estimate, rho_estimate
from .cache import ENV_VAR, load_table, save_table
from .canonical import (
    encode_goodstein,
    encode_horner,
    g_add,
    g_mul,
    g_pow,
    goodstein_levels,
    gs_to_symexpr,
    gs_value,
    horner_levels,
)
from .counting import (
    count_add_lop,
    count_add_only,
    count_am,
    count_ame,
    normalize_root,
)
from .enumeration import EnumerationRequest, enumerate_strings, enumerate_trees
from .errors import (
    FormulaForgeError,
    LevelTooLarge,
    MagnitudeError,
    SizeGuard,
)
from .graph import build_graph
from .sampling import sample_add, sample_add_lop, sample_am, sample_ame
from .shortest import shortest, shortest_range
from .sieve import rational_set, run_sieve, scf_coarse
from .symexpr import sym_value
from .trees import to_brackets, to_postfix, to_prefix

DEFAULT_LIST_LIMIT = 1_000_000


def _emit(obj):
    print(json.dumps(obj))


def _nstr(value, precision_bits):
    digits = max(17, precision_bits * 30103 // 100000 + 2)
    return mpmath.nstr(value, digits)


def _render_tree(tree, notation):
    if notation == "prefix":
        return to_prefix(tree)
    if notation == "postfix":
        return to_postfix(tree)
    return json.dumps(to_brackets(tree))


def _total_for(args):
    if args.lop:
        return count_add_lop(args.n)
    if args.gates == "a":
        return count_add_only(args.n)
    if args.gates == "am":
        return count_am(args.n, args.root)
    return count_ame(args.n, args.root)


def _cmd_count(args):
    if args.lop and (args.gates != "a" or args.root != "all"):
        raise FormulaForgeError("--lop applies to the add-only family, root all")
    if args.gates == "a" and args.root != "all":
        raise FormulaForgeError("root filters need --gates am or ame")
    out = {
        "n": args.n,
        "gates": args.gates,
        "root": args.root,
        "lop": args.lop,
        "total": str(_total_for(args)),
    }
    if args.root == "all" and args.gates == "am":
        out["by_root"] = {
            "add": str(count_am(args.n, "+")),
            "mul": str(count_am(args.n, "*")),
        }
    elif args.root == "all" and args.gates == "ame":
        out["by_root"] = {
            "add": str(count_ame(args.n, "+")),
            "mul": str(count_ame(args.n, "*")),
            "pow": str(count_ame(args.n, "^")),
        }
    _emit(out)
    return 0


def _cmd_list(args):
    if args.lop and (args.gates != "a" or args.root != "all"):
        raise FormulaForgeError("--lop applies to the add-only family, root all")
    if args.gates == "a" and args.root != "all":
        raise FormulaForgeError("root filters need --gates am or ame")
    request = EnumerationRequest(
        n=args.n, gates=args.gates, root=args.root, lop=args.lop
    )
    total = _total_for(args)
    limit = args.limit
    if limit is None:
        if total > DEFAULT_LIST_LIMIT and not args.unsafe:
            raise SizeGuard(
                f"{total} encodings (> {DEFAULT_LIST_LIMIT}); "
                "pass --limit or --unsafe"
            )
        limit = total
    if args.notation == "brackets":
        stream = (json.dumps(to_brackets(t)) for t in enumerate_trees(request))
    else:
        stream = enumerate_strings(request, args.notation)
    for i, line in enumerate(stream):
        if i >= limit:
            break
        print(line)
    return 0


def _cmd_sample(args):
    if args.lop and (args.gates != "a" or args.root != "all"):
        raise FormulaForgeError("--lop applies to the add-only family, root all")
    if args.gates == "a" and args.root != "all":
        raise FormulaForgeError("root filters need --gates am or ame")
    rng = random.Random(args.seed)
    for _ in range(args.count):
        if args.lop:
            tree = sample_add_lop(args.n, rng)
        elif args.gates == "a":
            tree = sample_add(args.n, rng)
        elif args.gates == "am":
            tree = sample_am(args.n, rng, args.root)
        else:
            tree = sample_ame(args.n, rng, args.root)
        print(_render_tree(tree, args.notation))
    return 0


def _cmd_shortest(args):
    if args.upto is not None:
        for entry in shortest_range(args.upto):
            _emit({"n": entry.n, "size": entry.size, "witness": to_prefix(entry.witness)})
        return 0
    entry = shortest(args.n)
    _emit({"n": entry.n, "size": entry.size, "witness": to_prefix(entry.witness)})
    return 0


def _gs_json(form):
    if not form.exponents:
        return {"value": "0", "text": "0"}
    return {"value": str(gs_value(form)), "text": str(gs_to_symexpr(form))}


def _cmd_goodstein(args):
    if args.mode == "levels":
        exprs = goodstein_levels(args.t, force=args.unsafe)
        _emit({
            "t": args.t,
            "count": len(exprs),
            "expressions": [
                {"value": str(sym_value(e)), "text": str(e)} for e in exprs
            ],
        })
        return 0
    if args.mode == "encode":
        form = encode_goodstein(args.a)
        _emit({"n": str(args.a), **_gs_json(form)})
        return 0
    fa, fb = encode_goodstein(args.a), encode_goodstein(args.b)
    if args.mode == "add":
        result = g_add(fa, fb)
    elif args.mode == "mul":
        result = g_mul(fa, fb)
    else:
        result = g_pow(fa, fb, max_bits=args.max_bits)
    _emit({"op": args.mode, "a": str(args.a), "b": str(args.b), **_gs_json(result)})
    return 0


def _cmd_horner(args):
    if args.mode == "levels":
        exprs = horner_levels(args.t, force=args.unsafe)
        _emit({
            "t": args.t,
            "count": len(exprs),
            "expressions": [
                {"value": str(sym_value(e)), "text": str(e)} for e in exprs
            ],
        })
        return 0
    expr = encode_horner(args.a)
    _emit({"n": str(args.a), "value": str(sym_value(expr)), "text": str(expr)})
    return 0


def _cmd_sieve(args):
    if args.coarse:
        state = scf_coarse(args.levels, force=args.unsafe)
    else:
        state = run_sieve(args.levels, force=args.unsafe)
    out = {
        "levels": args.levels,
        "coarse": args.coarse,
        "covers": str(state.covers),
        "prime_count": len(state.primes),
        "primes": [
            {"value": str(sym_value(p)), "text": str(p)} for p in state.primes
        ],
    }
    if args.integers:
        out["integers"] = [
            {"value": str(sym_value(e)), "text": str(e)} for e in state.integers
        ]
    if args.rationals:
        rs = rational_set(state, args.exponent_bound, args.factor_bound)
        out["rationals"] = [
            {"value": str(sym_value(e)), "text": str(e)} for e in rs
        ]
    _emit(out)
    return 0


def _cmd_rho(args):
    est = rho_estimate(args.gates, args.terms, args.iterations, args.precision_bits)
    _emit({
        "family": est.family,
        "rho": _nstr(est.rho, est.precision_bits),
        "fixed_point": _nstr(est.fixed_point, est.precision_bits),
        "terms": est.terms,
        "iterations": est.iterations,
        "extra_iterations": est.extra_iterations,
        "precision_bits": est.precision_bits,
        "residual": _nstr(est.residual, 17),
    })
    return 0


def _cmd_constant(args):
    est = constant_estimate(args.terms, args.iterations, args.precision_bits)
    if args.json:
        _emit({
            "rho": _nstr(est.rho, est.precision_bits),
            "constant": _nstr(est.constant, est.precision_bits),
            "radicand": _nstr(est.radicand, est.precision_bits),
            "terms": est.terms,
            "iterations": est.iterations,
            "precision_bits": est.precision_bits,
        })
        return 0
    print("n,ratio")
    for i, ratio in enumerate(est.ratios):
        print(f"{i + 2},{_nstr(ratio, 53)}")
    return 0


def _cmd_graph(args):
    g = build_graph(args.n, force=args.unsafe)
    if args.dot == "-":
        print(g.to_dot())
        return 0
    if args.dot is not None:
        with open(args.dot, "w") as fh:
            fh.write(g.to_dot())
            fh.write("\n")
    _emit(g.stats())
    return 0


def _cmd_cache(args):
    if args.mode == "save":
        if args.warm:
            count_add_only(args.warm)
            count_add_lop(args.warm)
            count_am(args.warm)
            count_ame(args.warm)
        rows = save_table(args.path)
        _emit({"saved": rows, "path": args.path})
        return 0
    rows = load_table(args.path)
    _emit({"loaded": rows, "path": args.path})
    return 0


def _add_family_flags(p, lop=True):
    p.add_argument("--gates", choices=["a", "am", "ame"], default="a",
                   help="gate set: a (add-only), am, or ame (default a)")
    p.add_argument("--root", choices=["all", "add", "mul", "pow"], default="all",
                   help="restrict the root gate (am/ame families)")
    if lop:
        p.add_argument("--lop", action="store_true",
                       help="left operand >= right (add-only family)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="formula-forge",
        description="Count, enumerate, sample, and encode formula trees "
        "over the gates +, *, ^ with all-1 inputs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact number of trees of value n")
    p.add_argument("n", type=int)
    _add_family_flags(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("list", help="enumerate all trees of value n")
    p.add_argument("n", type=int)
    _add_family_flags(p)
    p.add_argument("--notation", choices=["brackets", "prefix", "postfix"],
                   default="brackets")
    p.add_argument("--limit", type=int, default=None,
                   help="stop after this many encodings")
    p.add_argument("--unsafe", action="store_true",
                   help=f"allow streams beyond {DEFAULT_LIST_LIMIT} items")
    p.set_defaults(func=_cmd_list)

    p = sub.add_parser("sample", help="uniform random trees of value n")
    p.add_argument("n", type=int)
    _add_family_flags(p)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--notation", choices=["brackets", "prefix", "postfix"],
                   default="brackets")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("shortest", help="minimal strict encoding of n")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--upto", type=int, default=None,
                   help="all entries 1..N, one JSON line each")
    p.set_defaults(func=_cmd_shortest)

    p = sub.add_parser("goodstein", help="hereditary base-x normal forms")
    p.add_argument("mode", choices=["levels", "encode", "add", "mul", "pow"])
    p.add_argument("a", type=int, nargs="?")
    p.add_argument("b", type=int, nargs="?")
    p.add_argument("-t", type=int, default=1, help="level for mode=levels")
    p.add_argument("--max-bits", type=int, default=1 << 20,
                   help="bit budget for mode=pow")
    p.add_argument("--unsafe", action="store_true")
    p.set_defaults(func=_cmd_goodstein)

    p = sub.add_parser("horner", help="Horner-style canonical encodings")
    p.add_argument("mode", choices=["levels", "encode"])
    p.add_argument("a", type=int, nargs="?")
    p.add_argument("-t", type=int, default=1, help="level for mode=levels")
    p.add_argument("--unsafe", action="store_true")
    p.set_defaults(func=_cmd_horner)

    p = sub.add_parser("sieve", help="prime discovery by encoding completion")
    p.add_argument("--levels", type=int, default=3)
    p.add_argument("--coarse", action="store_true",
                   help="tower-paced levels (2 -> 4 -> 16 -> 65536)")
    p.add_argument("--integers", action="store_true",
                   help="include the full integer encoding table")
    p.add_argument("--rationals", action="store_true",
                   help="include signed-exponent prime products")
    p.add_argument("--exponent-bound", type=int, default=1)
    p.add_argument("--factor-bound", type=int, default=1)
    p.add_argument("--unsafe", action="store_true")
    p.set_defaults(func=_cmd_sieve)

    p = sub.add_parser("rho", help="growth base of a counting sequence")
    p.add_argument("--gates", choices=["am", "ame"], default="am")
    p.add_argument("--terms", type=int, default=100)
    p.add_argument("--iterations", type=int, default=20)
    p.add_argument("--precision-bits", type=int, default=100)
    p.set_defaults(func=_cmd_rho)

    p = sub.add_parser("constant", help="leading constant of the {+, *} counts")
    p.add_argument("--terms", type=int, default=100)
    p.add_argument("--iterations", type=int, default=20)
    p.add_argument("--precision-bits", type=int, default=100)
    p.add_argument("--json", action="store_true",
                   help="summary JSON instead of the n,ratio CSV")
    p.set_defaults(func=_cmd_constant)

    p = sub.add_parser("graph", help="one-step rewrite graph on trees of value n")
    p.add_argument("n", type=int)
    p.add_argument("--dot", metavar="PATH",
                   help="write Graphviz DOT here ('-' for stdout)")
    p.add_argument("--unsafe", action="store_true")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("cache", help="save or load the count cache")
    p.add_argument("mode", choices=["save", "load"])
    p.add_argument("path")
    p.add_argument("--warm", type=int, default=0,
                   help="fill all families up to N before saving")
    p.set_defaults(func=_cmd_cache)

    return parser


def _check_required(args, parser):
    if args.command == "shortest" and args.n is None and args.upto is None:
        parser.error("shortest needs n or --upto")
    if args.command == "goodstein":
        if args.mode in ("encode", "add", "mul", "pow") and args.a is None:
            parser.error(f"goodstein {args.mode} needs an operand")
        if args.mode in ("add", "mul", "pow") and args.b is None:
            parser.error(f"goodstein {args.mode} needs two operands")
        if args.mode == "levels":
            args.t = args.a if args.a is not None else args.t
    if args.command == "horner":
        if args.mode == "encode" and args.a is None:
            parser.error("horner encode needs an operand")
        if args.mode == "levels":
            args.t = args.a if args.a is not None else args.t


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_required(args, parser)
    cache_path = os.environ.get(ENV_VAR)
    try:
        if cache_path and os.path.exists(cache_path):
            load_table(cache_path)
        code = args.func(args)
    except (LevelTooLarge, SizeGuard, MagnitudeError) as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return 4
    except FormulaForgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if code == 0 and cache_path:
        try:
            save_table(cache_path)
        except OSError as exc:
            print(f"warning: could not write cache: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
