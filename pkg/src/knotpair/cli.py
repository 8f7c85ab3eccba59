"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import census, classify, closedform, girth, oracle
from .diagram import pd_from_json, pd_from_rep, pd_from_text, orient
from .laurent import (
    LaurentPoly,
    jones_from_bracket,
    jones_span_inclusive,
    jones_to_text,
    poly_to_text,
)
from .reps import Girth2Rep, Girth3Rep, parse_rep


def _read_pd(path: str):
    with open(path) as f:
        text = f.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return pd_from_json(text)
    return pd_from_text(text)


def _closed_conway(rep):
    inv = classify.rep_invariants(rep)
    return inv.conway


def cmd_eval(args) -> int:
    rep = parse_rep(args.rep)
    results: dict[str, dict] = {}

    def method_values(method: str) -> dict:
        pd = pd_from_rep(rep)
        ori = orient(pd)
        out: dict = {}
        if method == "closed":
            bracket = classify.closed_bracket(rep)
            conway = _closed_conway(rep)
        else:
            bracket = oracle.bracket_state_sum(pd, cap=args.budget_crossings)
            conway = (
                oracle.conway_fox(pd, cap=args.budget_crossings)
                if ori.n_components == 1
                else None
            )
        jones = jones_from_bracket(bracket, ori.writhe)
        out["bracket"] = bracket
        out["conway"] = conway
        out["jones"] = jones
        out["span"] = jones_span_inclusive(jones)
        return out

    methods = ["closed", "oracle"] if args.method == "both" else [args.method]
    for m in methods:
        results[m] = method_values(m)

    def fmt(vals: dict) -> str:
        if args.invariant == "conway":
            c = vals["conway"]
            return poly_to_text(c) if c is not None else "(not available)"
        if args.invariant == "bracket":
            return poly_to_text(vals["bracket"])
        if args.invariant == "jones":
            return jones_to_text(vals["jones"])
        if args.invariant == "span":
            return str(vals["span"])
        raise ValueError(args.invariant)

    if args.format == "json":
        print(json.dumps({m: fmt(v) for m, v in results.items()}))
    else:
        for m in methods:
            prefix = f"{m}: " if len(methods) > 1 else ""
            print(prefix + fmt(results[m]))
    if len(methods) == 2:
        agree = all(fmt(results["closed"]) == fmt(results["oracle"]) for _ in (0,))
        print("AGREE" if agree else "DISAGREE")
        return 0 if agree else 1
    return 0


def cmd_compare(args) -> int:
    r1, r2 = parse_rep(args.rep1), parse_rep(args.rep2)
    verdict = classify.compare(r1, r2, mirror_ok=args.mirror_ok)
    if args.format == "json":
        print(json.dumps(verdict.to_json_dict()))
    else:
        line = verdict.tag
        if verdict.evidence is not None:
            line += f"  evidence: {poly_to_text(verdict.evidence)}"
        if verdict.note:
            line += f"  ({verdict.note})"
        print(line)
    return 0


def cmd_girth(args, emit_rep: bool = False) -> int:
    pd = _read_pd(args.pd_file)
    g, witness = girth.diagram_girth(pd, budget=args.budget_crossings)
    if witness is None:
        print(f"girth 2 (degenerate crossing-free diagram, labels (0,0))")
        return 0
    if args.format == "json":
        out = {"girth": g, "witness": witness.summary()}
        if emit_rep:
            out["rep"] = str(girth.rep_from_decomposition(witness))
        print(json.dumps(out))
    else:
        print(f"girth {g}")
        print(f"witness: {witness.to_json()}")
        if emit_rep:
            print(f"rep: {girth.rep_from_decomposition(witness)}")
    return 0


def cmd_census(args) -> int:
    reps = census.census_enumerate(
        girth=args.girth,
        max_abs_label=args.max,
        even_only=args.even,
        positive_only=args.positive,
    )
    classes = census.dedup_census(reps)
    if args.format == "jsonl":
        text = census.census_jsonl(classes)
    else:
        text = census.census_csv(classes)
    if args.output:
        with open(args.output, "w") as f:
            f.write(text)
        print(f"{len(classes)} classes, {sum(len(c.members) for c in classes)} reps "
              f"-> {args.output}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify_table(args) -> int:
    results = census.verify_table(
        fixtures_dir=args.fixtures,
        max_crossings=args.max_crossings,
        apply_errata=args.errata,
    )
    if args.format == "json":
        print(census.table_results_json(results))
    else:
        print(census.table_report(results))
    return 0 if all(r.status != "FAIL" for r in results) else 1


def cmd_selftest(args) -> int:
    failures = 0

    def check(name: str, ok: bool) -> None:
        nonlocal failures
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        if not ok:
            failures += 1

    # closed-form brackets against the state sum on a grid
    ok = True
    detail = None
    for p in range(-3, 4):
        for q in range(-3, 4):
            pd = pd_from_rep(Girth2Rep(p, q))
            if oracle.bracket_state_sum(pd) != closedform.bracket_double_twist(p, q):
                ok, detail = False, (p, q)
    check(f"double twist bracket grid |p|,|q|<=3 {detail or ''}", ok)

    rng = random.Random(20240915)
    ok = True
    for _ in range(25):
        top = tuple(rng.randint(-2, 2) for _ in range(3))
        bot = tuple(rng.randint(-2, 2) for _ in range(3))
        rep = Girth3Rep(top, bot)
        if oracle.bracket_state_sum(pd_from_rep(rep)) != closedform.bracket_girth3(rep):
            ok = False
    check("girth-3 bracket vs oracle (25 random reps)", ok)

    ok = True
    for p in (2, 4):
        for q in (2, 4):
            for r in (0, 2):
                rep = Girth3Rep((p, q, r), (2, 2, 2))
                if oracle.conway_fox(pd_from_rep(rep)) != closedform.conway_girth3_even(rep):
                    ok = False
    check("girth-3 even Conway vs Fox oracle (sample)", ok)

    # the determinant example
    det = closedform.shat_cycle_det(Girth3Rep((4, 8, 12), (4, 6, 2)), "cycle_cab")
    lhs = det * (LaurentPoly.from_dict({2: 1, -2: 1}, "A") ** 2)
    rhs = LaurentPoly.from_dict({32: 1, 40: -2, 56: 2, 64: -1}, "A")
    check("S-determinant example (4 8 12 / 4 6 2)", lhs == rhs)

    ok = True
    for _ in range(20):
        rep = Girth3Rep(
            tuple(2 * rng.randint(1, 5) for _ in range(3)),
            tuple(2 * rng.randint(1, 5) for _ in range(3)),
        )
        for perm in ("swap_ab", "swap_bc", "swap_ac", "cycle_cab", "cycle_bca"):
            if closedform.conway_diff(rep, perm) != (
                closedform.conway_girth3_even(rep)
                - closedform.conway_girth3_even(closedform.permute_bottom(rep, perm))
            ):
                ok = False
            if closedform.bracket_diff(rep, perm) != closedform.bracket_diff_formula(
                rep, perm
            ):
                ok = False
    check("difference formulas (20 random even-positive reps)", ok)

    shat_ok = all(
        closedform.s_poly(q).shift(q)
        * LaurentPoly.from_dict({2: 1, -2: 1}, "A")
        == LaurentPoly.from_dict({0: 1, 4 * q: -((-1) ** q)}, "A")
        for q in range(-10, 11)
        if q != 0
    )
    check("S-hat identity |q| <= 10", shat_ok)

    print(f"{failures} failing suites" if failures else "all suites passed")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotpair",
        description="Exact invariants and girth decompositions of tree-pair knots",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an invariant of a representation")
    p.add_argument("rep", help="representation, e.g. '(2,-3)' or '[0 2 2 / 0 -1 -1]'")
    p.add_argument(
        "invariant", choices=["conway", "bracket", "jones", "span"]
    )
    p.add_argument("--method", choices=["closed", "oracle", "both"], default="closed")
    p.add_argument("--budget-crossings", type=int, default=oracle.BRACKET_CAP)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("compare", help="compare two representations")
    p.add_argument("rep1")
    p.add_argument("rep2")
    p.add_argument("--mirror-ok", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("girth", help="diagram girth of a PD file")
    p.add_argument("pd_file")
    p.add_argument("--budget-crossings", type=int, default=girth.TREE_BUDGET_CROSSINGS)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=lambda a: cmd_girth(a, emit_rep=False))

    p = sub.add_parser(
        "decompose", help="diagram girth plus recovered representation"
    )
    p.add_argument("pd_file")
    p.add_argument("--budget-crossings", type=int, default=girth.TREE_BUDGET_CROSSINGS)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=lambda a: cmd_girth(a, emit_rep=True))

    p = sub.add_parser("census", help="enumerate and deduplicate representations")
    p.add_argument("--girth", type=int, choices=[2, 3], required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--even", action="store_true")
    p.add_argument("--positive", action="store_true")
    p.add_argument("--jobs", type=int, default=1, help="accepted for compatibility")
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify-table", help="check table reps against fixtures")
    p.add_argument("--fixtures", default=None, help="fixture directory override")
    p.add_argument("--max-crossings", type=int, default=None)
    p.add_argument("--errata", action="store_true", help="apply documented errata")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify_table)

    p = sub.add_parser("selftest", help="run the formula-vs-oracle suites")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
