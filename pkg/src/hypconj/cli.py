"""Command-line front end: ``python3 -m hypconj <command> ...``."""

from __future__ import annotations

import argparse
import dataclasses
import json
import random
import statistics
import sys
import time
from typing import Sequence

from .context import Caps, GroupContext, load_group
from .errors import HypConjError
from .list_solver import ListOutcome, Status, centraliser_lists, load_word_list, solve_lists
from .oracle import brute_conjugator, random_normal_form
from .straightness import Finite, test_inf_order

EXIT_DECIDED, EXIT_ERROR, EXIT_UNVERIFIED = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _caps(args) -> Caps:
    base = Caps.paper() if args.profile == "paper" else Caps.practical()
    overrides = {
        "conjugator_radius_cap": args.conjugator_radius,
        "centraliser_radius_cap": args.centraliser_radius,
        "power_cap": args.power_cap,
        "hard_radius": args.hard_radius,
        "ball_budget": args.ball_budget,
    }
    return dataclasses.replace(base, **{k: v for k, v in overrides.items() if v is not None})


def _emit(args, record: dict) -> None:
    if args.format == "json":
        print(json.dumps(record, sort_keys=True))
        return
    for key, value in record.items():
        if isinstance(value, dict):
            value = " ".join(f"{k}={v}" for k, v in value.items())
        elif isinstance(value, (list, tuple)):
            value = ", ".join(str(v) for v in value)
        print(f"{key}: {value}")


def _show(ctx: GroupContext, w) -> str:
    return ctx.format(w) or "1"


def _outcome_record(ctx: GroupContext, out: ListOutcome) -> dict:
    record = {"outcome": out.status.value}
    if out.witness is not None:
        record["witness"] = _show(ctx, out.witness)
    record["route"] = out.route
    if out.detail:
        record["detail"] = out.detail
    record["checks"] = list(out.checks)
    return record


def _finish(args, ctx: GroupContext, record: dict, unverified: bool = False) -> int:
    record["caps"] = dataclasses.asdict(ctx.caps)
    _emit(args, record)
    return EXIT_UNVERIFIED if unverified else EXIT_DECIDED


def cmd_reduce(args, ctx):
    return _finish(args, ctx, {"normal_form": _show(ctx, ctx.reduce(ctx.word(args.word)))})


def cmd_order(args, ctx):
    res = test_inf_order(ctx, ctx.reduce(ctx.word(args.word)))
    record = {"order": res.order} if isinstance(res, Finite) else {"order": "infinite"}
    return _finish(args, ctx, record)


def _lists_result(args, ctx, A, B):
    out = solve_lists(ctx, A, B)
    return _finish(args, ctx, _outcome_record(ctx, out), out.status is Status.UNVERIFIED)


def cmd_conj(args, ctx):
    return _lists_result(args, ctx, [ctx.word(args.u)], [ctx.word(args.v)])


def cmd_conj_lists(args, ctx):
    return _lists_result(args, ctx, load_word_list(args.A, ctx), load_word_list(args.B, ctx))


def cmd_centraliser(args, ctx):
    res = centraliser_lists(ctx, load_word_list(args.A, ctx))
    record = {
        "generators": [_show(ctx, g) for g in res.generators],
        "complete": res.complete,
        "route": res.route,
    }
    if res.detail:
        record["detail"] = res.detail
    record["checks"] = list(res.checks)
    return _finish(args, ctx, record, not res.complete)


def cmd_oracle_conj(args, ctx):
    A, B = load_word_list(args.A, ctx), load_word_list(args.B, ctx)
    if len(A) != len(B):
        raise HypConjError("lists must have equal length")
    g = brute_conjugator(ctx, A, B, args.radius)
    record = {"outcome": "conjugate" if g is not None else f"none within radius {args.radius}"}
    if g is not None:
        record["witness"] = _show(ctx, g)
    return _finish(args, ctx, record)


def cmd_constants(args, ctx):
    c = ctx.constants
    record = {"group": ctx.name, "delta": c.delta, "L": c.L, "V": c.V, "M": c.M, "R": c.R,
              "torsion_order_bound": c.torsion_order_bound, "n": c.distinct_prefix_count}
    return _finish(args, ctx, record)


def bench_instance(ctx: GroupContext, m: int, mu: int, rng: random.Random, conjugator_length: int = 8):
    A = [random_normal_form(ctx, mu, rng) for _ in range(m)]
    g = random_normal_form(ctx, conjugator_length, rng)
    return A, [ctx.conjugate(a, g) for a in A]


def run_bench(ctx: GroupContext, m: int, mus: Sequence[int], reps: int = 3, seed: int = 0) -> list[dict]:
    """Median wall time of ``solve_lists`` on conjugate round-trip instances for each ``mu``."""
    rows = []
    for mu in mus:
        rng = random.Random(f"{seed}:{m}:{mu}")
        times = []
        status = set()
        for _ in range(reps):
            A, B = bench_instance(ctx, m, mu, rng)
            start = time.perf_counter()
            out = solve_lists(ctx, A, B)
            times.append(time.perf_counter() - start)
            status.add(out.status.value)
        rows.append({"mu": mu, "m": m, "seconds": statistics.median(times), "reps": reps,
                     "outcomes": sorted(status)})
    return rows


def cmd_bench(args, ctx):
    mus = [int(x) for x in args.mu_list.split(",") if x.strip()]
    for row in run_bench(ctx, args.m, mus, args.reps, args.seed):
        print(json.dumps(row, sort_keys=True))
    return EXIT_DECIDED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hypconj", description="Conjugacy of finite lists in hyperbolic groups.")
    common = _Parser(add_help=False)
    common.add_argument("-g", "--group", required=True, help="group definition file")
    common.add_argument("--profile", choices=("practical", "paper"), default="practical")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--conjugator-radius", type=int, help="cap on the conjugator search radius")
    common.add_argument("--centraliser-radius", type=int, help="cap on the centraliser search radius")
    common.add_argument("--power-cap", type=int, help="largest power tried when seeking a long power")
    common.add_argument("--hard-radius", type=int, help="refuse searches beyond this radius")
    common.add_argument("--ball-budget", type=int, help="maximum number of ball elements")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    add("reduce", cmd_reduce, "shortlex normal form").add_argument("-w", "--word", required=True)
    add("order", cmd_order, "finite order or infinite").add_argument("-w", "--word", required=True)
    p = add("conj", cmd_conj, "conjugacy of two words")
    p.add_argument("-u", required=True)
    p.add_argument("-v", required=True)
    for name, func in (("conj-lists", cmd_conj_lists), ("oracle-conj", cmd_oracle_conj)):
        p = add(name, func, "conjugacy of two lists" if func is cmd_conj_lists else "brute-force conjugator")
        p.add_argument("-A", required=True, help="list file, one word per line")
        p.add_argument("-B", required=True, help="list file, one word per line")
        if func is cmd_oracle_conj:
            p.add_argument("--radius", type=int, default=6)
    add("centraliser", cmd_centraliser, "centraliser of a list").add_argument("-A", required=True)
    add("constants", cmd_constants, "derived constants")
    p = add("bench", cmd_bench, "timing of conjugate round trips (JSON lines)")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--mu-list", default="1000,2000,4000,8000")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_DECIDED
    try:
        ctx = load_group(args.group, _caps(args))
        return args.func(args, ctx)
    except (HypConjError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
