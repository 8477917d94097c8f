"""Command-line front end: gen / solve / verify / analyze.

Exit codes: 0 ok, 1 parse error, 2 no GAP cover found, 3 infeasible
instance, 4 verification mismatch.
"""

import argparse
import json
import sys

from .additive import (
    DEFAULT_ENUM_BUDGET,
    doubling_constant,
    gap_cover_search,
    hfold,
    sumset,
)
from .encoding import DEFAULT_PERM_BUDGET, build_permutation, enlarge
from .errors import (
    BudgetExceeded,
    Disconnected,
    GapsolveError,
    InfeasibleInstance,
    NoCoverFound,
    ParseError,
    TooLarge,
)
from .instances import (
    generate_instance,
    parse_gap_spec,
    parse_instance,
    serialize_instance,
)
from .meta import run_meta
from .oracle import clique_bf, maxcut_bf, minplus_naive, steiner_bf, tsp_bf

SCHEMA_VERSION = 1


def _read_instance(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_instance(fh.read())
    except (OSError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(1)


def cmd_gen(args):
    try:
        gap = parse_gap_spec(args.gap)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        inst = generate_instance(
            args.kind, args.n, gap, args.seed, density=args.density,
            k=args.k, n_terminals=args.terminals,
        )
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = serialize_instance(inst, seed=args.seed)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _solve(inst, args):
    return run_meta(
        inst,
        modulus=_pick_modulus(args),
        max_dim=args.max_dim,
        volume_budget=args.volume_budget,
    )


def _pick_modulus(args):
    if not getattr(args, "modular", False):
        return None
    import random

    import sympy

    return sympy.nextprime(random.Random(args.seed).getrandbits(62))


def _report(inst, res, args):
    report = {
        "schema_version": SCHEMA_VERSION,
        "kind": inst.kind,
        "optimum": res.optimum,
        "encoded_optimum": res.encoded_optimum,
        "coords": list(res.coords),
        "gap": {
            "generators": list(res.gap_used.generators),
            "bounds": list(res.gap_used.bounds),
        },
        "lambda": res.lam,
        "doubling_constant": str(res.stats["doubling_constant"]),
        "encoded_range_bound": res.stats["encoded_range_bound"],
        "wall_time": res.stats["wall_time"],
    }
    if "sequence" in res.stats:
        report["sequence"] = res.stats["sequence"]
    if getattr(args, "perm_budget", 0):
        try:
            table = build_permutation(enlarge(res.gap_used, res.lam),
                                      budget=args.perm_budget)
            report["permutation_size"] = len(table.sorted_entries)
            report["optimum_rank"] = table.rank(res.encoded_optimum)
        except BudgetExceeded:
            report["permutation_size"] = None
    if getattr(args, "json", False):
        print(json.dumps(report))
    else:
        print(f"kind              {report['kind']}")
        print(f"optimum           {report['optimum']}")
        print(f"encoded optimum   {report['encoded_optimum']}")
        print(f"gap generators    {report['gap']['generators']}")
        print(f"gap bounds        {report['gap']['bounds']}")
        print(f"lambda            {report['lambda']}")
        print(f"doubling constant {report['doubling_constant']}")
        print(f"|G'| bound        {report['encoded_range_bound']}")
        print(f"wall time         {report['wall_time']:.4f}s")
        if "sequence" in report:
            print("sequence          " + " ".join(str(v) for v in report["sequence"]))


def cmd_solve(args):
    inst, _ = _read_instance(args.path)
    if args.gap:
        from dataclasses import replace

        inst = replace(inst, gap=parse_gap_spec(args.gap))
    try:
        res = _solve(inst, args)
    except NoCoverFound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InfeasibleInstance, Disconnected) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 3
    _report(inst, res, args)
    return 0


def _oracle_optimum(inst):
    if inst.kind == "tsp":
        return tsp_bf(inst).optimum
    if inst.kind == "maxcut":
        return maxcut_bf(inst).optimum
    if inst.kind == "ewclique":
        return clique_bf(inst, inst.k).optimum
    if inst.kind == "steiner":
        return steiner_bf(inst).optimum
    return minplus_naive(list(inst.sequence))


def _verify_one(inst, args):
    """Returns (status, message); status in {'pass', 'fail', 'infeasible'}."""
    try:
        res = _solve(inst, args)
        meta_opt = res.stats["sequence"] if inst.kind == "minplusconv" else res.optimum
        meta_ok = True
    except (InfeasibleInstance, Disconnected):
        meta_ok = False
    try:
        oracle_opt = _oracle_optimum(inst)
        oracle_ok = True
    except (InfeasibleInstance, Disconnected):
        oracle_ok = False
    if not meta_ok or not oracle_ok:
        if meta_ok == oracle_ok:
            return "infeasible", "both report infeasible"
        return "fail", f"feasibility disagrees (meta={meta_ok}, oracle={oracle_ok})"
    if meta_opt == oracle_opt:
        return "pass", f"meta={meta_opt} oracle={oracle_opt}"
    return "fail", f"meta={meta_opt} oracle={oracle_opt}"


def cmd_verify(args):
    if args.sweep:
        if not args.gap:
            print("error: --sweep requires --gap", file=sys.stderr)
            return 1
        gap = parse_gap_spec(args.gap)
        failures = 0
        for i in range(args.sweep):
            inst = generate_instance(
                args.kind, args.n, gap, (args.seed or 0) + i,
                density=args.density, k=args.k, n_terminals=args.terminals,
            )
            status, msg = _verify_one(inst, args)
            print(f"[{i}] {status.upper()}: {msg}")
            if status == "fail":
                failures += 1
        return 4 if failures else 0
    inst, _ = _read_instance(args.path)
    try:
        status, msg = _verify_one(inst, args)
    except (TooLarge, NoCoverFound) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"{status.upper()}: {msg}")
    return 4 if status == "fail" else 0


def cmd_analyze(args):
    inst, _ = _read_instance(args.path)
    a = inst.weights
    aa = sumset(a, a)
    print(f"|A|        {len(a)}")
    print(f"|A+A|      {len(aa)}")
    print(f"C(A)       {doubling_constant(a)}")
    for h in range(1, 5):
        print(f"|{h}A|{' ' * (7 - len(str(h)))}{len(hfold(a, h))}")
    gap = inst.gap
    if gap is None:
        try:
            gap = gap_cover_search(a, max_dim=args.max_dim,
                                   volume_budget=args.volume_budget)
        except NoCoverFound:
            gap = None
    if gap is None:
        print("gap        none found")
    else:
        print(f"gap gens   {list(gap.generators)}")
        print(f"gap bounds {list(gap.bounds)}")
    return 0


def _add_common_solve_flags(p):
    p.add_argument("--gap", help="override GAP, e.g. 'd=1 x=7 L=20 offset=10^12'")
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--volume-budget", type=int, default=DEFAULT_ENUM_BUDGET)
    p.add_argument("--perm-budget", type=int, default=DEFAULT_PERM_BUDGET)
    p.add_argument("--modular", action="store_true",
                   help="modular coefficient mode (random 62-bit prime)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="gapsolve",
        description="Solve small-doubling weighted instances via GAP encoding.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a deterministic instance")
    p.add_argument("kind", choices=["tsp", "maxcut", "ewclique", "steiner", "minplusconv"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gap", required=True)
    p.add_argument("--density", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--terminals", type=int, default=3)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("path")
    _add_common_solve_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="compare against the brute-force oracle")
    p.add_argument("path", nargs="?")
    p.add_argument("--sweep", type=int, default=0, metavar="N",
                   help="generate and verify N random instances")
    p.add_argument("--kind", default="tsp",
                   choices=["tsp", "maxcut", "ewclique", "steiner", "minplusconv"])
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--density", type=float, default=1.0)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--terminals", type=int, default=3)
    _add_common_solve_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="doubling analytics of the weight set")
    p.add_argument("path")
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--volume-budget", type=int, default=DEFAULT_ENUM_BUDGET)
    p.set_defaults(func=cmd_analyze)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GapsolveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
