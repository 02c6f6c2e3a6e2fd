"""Command-line front end.

Exit codes: 0 when every cross-check passes, 1 on a mathematical mismatch,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from math import factorial
from typing import Optional

from . import __version__
from .ehrhart import count_lattice_points, ehrhart_table, segment_count, volume_by_interpolation
from .exact import format_rational
from .fixed_polytope import (
    FixedPolytope,
    combine_generators,
    contains,
    contains_bruteforce,
    generator_pairs,
    inversion_decomposition,
    orbit_average,
    sigma_vertices_by_averaging,
    vertex_of_order,
)
from .permutations import (
    CycleType,
    Permutation,
    PermutationParseError,
    act,
    all_permutations,
    cycle_type,
    format_permutation,
    integer_partitions,
    parse_permutation,
    standard_form,
)
from .subgroup import cycle_partition, partition_join, representative_sigma
from .volume import VolumeMismatchError, volume_by_tiling, volume_closed_form

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _q(values) -> list[str]:
    return [format_rational(v) for v in values]


def _status(checks: dict[str, bool]) -> dict[str, str]:
    return {k: "pass" if v else "fail" for k, v in checks.items()}


def _report(command: str, inp: dict, results: dict, checks: dict[str, bool]) -> dict:
    return {
        "command": command,
        "input": inp,
        "results": results,
        "checks": _status(checks),
        "status": "pass" if all(checks.values()) else "fail",
    }


def _resolve_sigma(args) -> tuple[Permutation, dict]:
    if args.sigma is not None and args.type is not None:
        raise UsageError("give either --sigma or --type, not both")
    if args.type is not None:
        try:
            lam = CycleType.parse(args.type)
        except PermutationParseError as exc:
            raise UsageError(str(exc)) from None
        return standard_form(lam), {"type": list(lam.lengths)}
    if args.sigma is None:
        raise UsageError("one of --sigma or --type is required")
    try:
        sigma = parse_permutation(args.sigma, args.n)
    except (PermutationParseError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    return sigma, {"sigma": args.sigma, "n": sigma.n}


def describe_sigma(sigma: Permutation) -> tuple[dict, dict[str, bool]]:
    poly = FixedPolytope.of(sigma)
    n = sigma.n
    by_avg = {v.point for v in sigma_vertices_by_averaging(sigma)}
    points = [v.point for v in poly.vertices]
    checks = {
        "vertex_count": len(set(points)) == factorial(sigma.m),
        "vertices_match_averaging": set(points) == by_avg,
        "vertices_fixed": all(act(sigma, p) == p for p in points),
        "vertex_sums": all(sum(p) == n * (n + 1) // 2 for p in points),
        "far_vertex_from_generators":
            combine_generators(sigma, {jk: 1 for jk in generator_pairs(sigma.m)})
            == vertex_of_order(sigma, reversed(range(sigma.m))),
    }
    if sigma.is_standardized():
        checks["translation_is_average_of_identity"] = (
            poly.translation == orbit_average(sigma, range(1, n + 1)))
    results = {
        "sigma": format_permutation(sigma),
        "one_line": list(sigma.one_line),
        "n": n,
        "m": sigma.m,
        "cycle_type": list(poly.cycle_type.lengths),
        "cycles": [list(c) for c in sigma.cycles],
        "dimension": poly.dimension,
        "vertices": [{"order": [k + 1 for k in v.order], "point": _q(v.point)}
                     for v in poly.vertices],
        "generators": [{"pair": [j + 1, k + 1], "vector": list(g)}
                       for (j, k), g in zip(generator_pairs(sigma.m), poly.generators)],
        "translation": _q(poly.translation),
    }
    return results, checks


def volume_results(sigma: Permutation, verify: str, threads: int,
                   check_fraction: float) -> tuple[dict, dict[str, bool]]:
    lam = cycle_type(sigma)
    closed = volume_closed_form(lam)
    results = {"cycle_type": list(lam.lengths), "closed_form": format_rational(closed),
               "tiling": None, "oracle": None}
    checks = {}
    if verify in ("tiling", "full"):
        try:
            tiling = volume_by_tiling(lam, check_fraction=check_fraction, workers=threads)
            checks["per_tree_self_check"] = True
        except VolumeMismatchError:
            tiling = None
            checks["per_tree_self_check"] = False
        results["tiling"] = None if tiling is None else format_rational(tiling)
        checks["tiling"] = tiling == closed
    if verify == "full":
        oracle = volume_by_interpolation(sigma, workers=threads)
        results["oracle"] = format_rational(oracle)
        checks["oracle"] = oracle == closed
    return results, checks


def cmd_describe(args) -> dict:
    sigma, inp = _resolve_sigma(args)
    results, checks = describe_sigma(sigma)
    return _report("describe", inp, results, checks)


def cmd_volume(args) -> dict:
    sigma, inp = _resolve_sigma(args)
    inp["verify"] = args.verify
    results, checks = volume_results(sigma, args.verify, args.threads, args.self_check)
    return _report("volume", inp, results, checks)


def cmd_ehrhart(args) -> dict:
    sigma, inp = _resolve_sigma(args)
    if args.t_max < 1:
        raise UsageError("--t-max must be positive")
    inp["t_max"] = args.t_max
    lengths = cycle_type(sigma).lengths
    rows = []
    checks = {}
    for t, count in ehrhart_table(sigma, args.t_max, method=args.method, workers=args.threads):
        row = {"t": t, "count": count}
        if len(lengths) == 2:
            predicted = segment_count(lengths[0], lengths[1], t)
            row["predicted"] = predicted
            row["match"] = predicted == count
            checks[f"segment_t{t}"] = predicted == count
        rows.append(row)
    results = {"cycle_type": list(lengths), "m": len(lengths), "rows": rows}
    return _report("ehrhart", inp, results, checks)


def cmd_subgroup(args) -> dict:
    if not args.gen:
        raise UsageError("at least one --gen is required")
    if args.n is None:
        raise UsageError("--n is required for subgroup")
    try:
        gens = [parse_permutation(g, args.n) for g in args.gen]
    except (PermutationParseError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    parts = [cycle_partition(g) for g in gens]
    join = partition_join(parts)
    sigma = representative_sigma(gens)
    described, checks = describe_sigma(sigma)
    vol, vol_checks = volume_results(sigma, args.verify, args.threads, args.self_check)
    checks.update({"volume_" + k: v for k, v in vol_checks.items()})
    checks["generators_preserve_blocks"] = all(
        {g(a) for a in block} == set(block) for g in gens for block in join.blocks)
    results = {
        "partitions": [str(p) for p in parts],
        "join": str(join),
        "sigma": format_permutation(sigma),
        "describe": described,
        "volume": vol,
    }
    return _report("subgroup", {"n": args.n, "gen": list(args.gen), "verify": args.verify},
                   results, checks)


def _selftest_checks(rng: random.Random, rounds: int) -> dict[str, bool]:
    checks = {}

    ok = True
    for n in range(1, 5):
        perms = list(all_permutations(n))
        x = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n))
        for s in perms:
            for t in perms:
                ok &= act(s * t, x) == act(s, act(t, x))
    checks["group_action"] = ok

    ok = True
    for _ in range(rounds):
        n = rng.randint(1, 12)
        vals = list(range(1, n + 1))
        rng.shuffle(vals)
        p = Permutation(tuple(vals))
        ok &= parse_permutation(format_permutation(p), n) == p
        ok &= parse_permutation(format_permutation(p, "one-line"), n) == p
    checks["parse_format_roundtrip"] = ok

    ok = True
    for _ in range(rounds // 10):
        n = rng.randint(3, 8)
        sigma = standard_form(rng.choice(list(integer_partitions(n))))
        w = [rng.randint(1, n) for _ in range(n)]
        shift = sum(range(1, n + 1)) - sum(w)
        w[0] += shift
        x = orbit_average(sigma, w)
        ok &= contains(sigma, x) == contains_bruteforce(sigma, x)
    checks["membership_reduction"] = ok

    ok = True
    for n in range(2, 6):
        for lam in integer_partitions(n):
            sigma = standard_form(lam)
            ident = Permutation.identity(n)
            for _ in range(5):
                vals = list(range(1, n + 1))
                rng.shuffle(vals)
                tau = Permutation(tuple(vals))
                alpha = inversion_decomposition(sigma, tau)
                ok &= combine_generators(sigma, alpha) == orbit_average(sigma, tau.one_line)
                ok &= all(0 <= a <= 1 for a in alpha.values())
            ok &= orbit_average(sigma, ident.one_line) == combine_generators(sigma, {})
    checks["inversion_decomposition"] = ok

    ok = True
    for n in range(2, 6):
        for lam in integer_partitions(n):
            ok &= volume_by_tiling(lam, check_fraction=1.0) == volume_closed_form(lam)
            ok &= volume_by_interpolation(standard_form(lam)) == volume_closed_form(lam)
    checks["volume_three_ways"] = ok

    ok = True
    for l1 in range(1, 5):
        for l2 in range(1, l1 + 1):
            sigma = standard_form([l1, l2])
            for t in range(1, 6):
                ok &= segment_count(l1, l2, t) == count_lattice_points(sigma, t, "enumerate")
    checks["segment_counts"] = ok
    return checks


def cmd_selftest(args) -> dict:
    seed_text = os.environ.get("PERMAFIX_SEED")
    seed = int(seed_text) if seed_text else random.SystemRandom().randrange(2 ** 32)
    checks = _selftest_checks(random.Random(seed), args.rounds)
    return _report("selftest", {"seed": seed, "rounds": args.rounds}, {}, checks)


def _render_text(report: dict) -> str:
    lines = [f"# {report['command']}"]
    for k, v in report["input"].items():
        lines.append(f"input.{k}: {v}")
    res = report["results"]
    cmd = report["command"]
    if cmd == "describe" or cmd == "subgroup":
        if cmd == "subgroup":
            lines.append("partitions: " + "  ".join(res["partitions"]))
            lines.append(f"join: {res['join']}")
            lines.append(f"representative: {res['sigma']}")
            desc = res["describe"]
        else:
            desc = res
        lines.append(f"sigma: {desc['sigma']}  cycle type: {desc['cycle_type']}  "
                     f"m: {desc['m']}  dimension: {desc['dimension']}")
        lines.append(f"vertices ({len(desc['vertices'])}):")
        for v in desc["vertices"]:
            order = "<".join(map(str, v["order"]))
            lines.append(f"  {order:<16} ({', '.join(v['point'])})")
        lines.append(f"generators ({len(desc['generators'])}):")
        for g in desc["generators"]:
            lines.append(f"  g{g['pair'][0]}{g['pair'][1]:<3} {tuple(g['vector'])}")
        lines.append(f"translation: ({', '.join(desc['translation'])})")
        if cmd == "subgroup":
            res = res["volume"]
    if cmd in ("volume", "subgroup"):
        lines.append(f"volume closed form: {res['closed_form']}")
        if res["tiling"] is not None:
            lines.append(f"volume by tiling:   {res['tiling']}")
        if res["oracle"] is not None:
            lines.append(f"volume by Ehrhart:  {res['oracle']}")
    if cmd == "ehrhart":
        seg = res["m"] == 2
        lines.append(f"{'t':>4} {'count':>12}" + (f" {'predicted':>10} match" if seg else ""))
        for row in res["rows"]:
            line = f"{row['t']:>4} {row['count']:>12}"
            if seg:
                line += f" {row['predicted']:>10} {'yes' if row['match'] else 'NO'}"
            lines.append(line)
    for name, status in report["checks"].items():
        lines.append(f"[{status}] {name}")
    lines.append(f"status: {report['status']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permafix",
        description="Fixed polytopes of the permutahedron: vertices, volumes, lattice points.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_sigma=True):
        if with_sigma:
            p.add_argument("--sigma", help='permutation, cycle form "(1,2)(3,4)" or one-line "2 1 4 3"')
            p.add_argument("--type", help="cycle type, e.g. 4,3,2 (uses the standardized permutation)")
        p.add_argument("--n", type=int, help="degree; required with cycle notation")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--threads", type=int, default=1, help="worker processes")

    p = sub.add_parser("describe", help="vertices, generators and dimension")
    common(p)
    p.set_defaults(func=cmd_describe)

    verify_opts = dict(choices=["none", "tiling", "full"], default="none")
    p = sub.add_parser("volume", help="normalized volume, optionally cross-checked")
    common(p)
    p.add_argument("--verify", **verify_opts)
    p.add_argument("--self-check", type=float, default=0.01,
                   help="fraction of trees also checked by minor gcds")
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("ehrhart", help="lattice points in dilates t = 1..t-max")
    common(p)
    p.add_argument("--t-max", type=int, default=6)
    p.add_argument("--method", choices=["dp", "enumerate"], default="dp")
    p.set_defaults(func=cmd_ehrhart)

    p = sub.add_parser("subgroup", help="reduce a generated subgroup to one permutation")
    common(p, with_sigma=False)
    p.add_argument("--gen", action="append", default=[], help="generator (repeatable)")
    p.add_argument("--verify", **verify_opts)
    p.add_argument("--self-check", type=float, default=0.01)
    p.set_defaults(func=cmd_subgroup)

    p = sub.add_parser("selftest", help="randomized property checks (seed: PERMAFIX_SEED)")
    p.add_argument("--rounds", type=int, default=200)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "threads", 1) < 1:
            raise UsageError("--threads must be positive")
        report = args.func(args)
    except UsageError as exc:
        print(f"permafix {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(_render_text(report))
    return EXIT_OK if report["status"] == "pass" else EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
