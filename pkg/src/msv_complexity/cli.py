"""
Command line front end.

Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .complexity import REPORT_FIELDS, analyze, reports_to_csv
from .constructions import compose_antidiagonal, witness
from .diagrams import opposite_rothe
from .ideal_desc import DescriptorLimitError, minor_generators, rank_conditions
from .perm_core import parse_permutation
from .render import LAYERS, RenderSpec, render
from .survey import (
    DEFAULT_MAX_N,
    WORKERS_ENV,
    CacheError,
    SurveyLimitError,
    TheoremId,
    load_cache,
    sample_reports,
    save_cache,
    spectrum,
    verify,
)

EXIT_OK, EXIT_USAGE, EXIT_FAILED, EXIT_LIMIT = 0, 1, 2, 3

THEOREM_ALIASES = {
    "max": TheoremId.MAX_VALUE,
    "unique": TheoremId.UNIQUE_MAXIMIZER,
    "spectrum": TheoremId.FULL_SPECTRUM,
    "no-one": TheoremId.NO_COMPLEXITY_ONE,
    **{t.value: t for t in TheoremId},
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _human_report(r) -> str:
    w = r.w.one_line()
    rows = [
        ("w", w),
        ("n", r.n),
        ("|D°(w)|", r.card_opposite_rothe),
        ("|dom(w)|", r.card_dominant),
        ("|sw(w)|", r.card_southwest),
        ("|L(w)|", r.card_l),
        ("|L'(w)|", r.card_l_prime),
        ("|V(G(w))|", r.vertex_count),
        ("|comp(G(w))|", r.component_count),
        ("dim cone", r.cone_dim),
        ("dim MSV_w", r.dim_msv),
        ("dim Y_w", r.dim_y),
        ("length", r.length),
        ("complexity d", r.complexity),
    ]
    width = max(len(k) for k, _ in rows)
    lines = [f"{k:<{width}}  {v}" for k, v in rows]
    lines.append(
        f"d = {r.card_l} + {r.card_dominant} - {r.card_opposite_rothe} "
        f"- {r.vertex_count} + {r.component_count} = {r.complexity}"
    )
    return "\n".join(lines)


def cmd_compute(args) -> int:
    w = parse_permutation(args.perm)
    r = analyze(w, check_rank=args.check_rank)
    if args.format == "json":
        d = r.to_dict()
        if args.ideal:
            d["rank_conditions"] = [[list(c.cell), c.bound] for c in rank_conditions(w)]
        print(json.dumps(d, indent=1))
    elif args.format == "csv":
        sys.stdout.write(reports_to_csv([r]))
    else:
        print(_human_report(r))
        if args.ideal:
            print("rank conditions:")
            for c in rank_conditions(w):
                print(f"  rk(M[{c.cell[0]}.., ..{c.cell[1]}]) <= {c.bound}")
            try:
                gens = minor_generators(w, for_y=True, cap=args.cap)
            except DescriptorLimitError as exc:
                print(f"  {exc.count} minors (over cap {exc.cap}, not listed)")
            else:
                print("Y_w generators:")
                for g in gens:
                    print(f"  {g}")
    return EXIT_OK


def cmd_render(args) -> int:
    w = parse_permutation(args.perm)
    layers = tuple(s.strip() for s in args.layers.split(",") if s.strip())
    spec = RenderSpec(target=args.target, show=layers, cell_labels=args.labels)
    sys.stdout.write(render(w, spec))
    return EXIT_OK


def _print_spectrum_table(n, witnesses, counts, fmt, header_extra=""):
    if fmt == "json":
        print(json.dumps({
            "n": n,
            "achieved": sorted(witnesses),
            "witnesses": {str(d): witnesses[d].one_line() for d in sorted(witnesses)},
            "counts": {str(d): counts[d] for d in sorted(witnesses)},
        }, indent=1))
        return
    if fmt == "csv":
        print("d,count,witness")
        for d in sorted(witnesses):
            print(f"{d},{counts[d]},{witnesses[d].one_line()}")
        return
    print(f"S_{n}{header_extra}: achieved complexities {sorted(witnesses)}")
    print(f"{'d':>4}  {'count':>10}  witness")
    for d in sorted(witnesses):
        print(f"{d:>4}  {counts[d]:>10}  {witnesses[d].one_line()}")


def cmd_spectrum(args) -> int:
    n = args.n
    if args.sample:
        witnesses, counts = {}, {}
        for r in sample_reports(n, args.sample, args.seed):
            d = r.complexity
            counts[d] = counts.get(d, 0) + 1
            if d not in witnesses or r.w < witnesses[d]:
                witnesses[d] = r.w
        _print_spectrum_table(n, witnesses, counts, args.format,
                              f" (sample of {args.sample}, seed {args.seed})")
        return EXIT_OK
    result = None
    if args.cache:
        try:
            result = load_cache(n, args.cache)
        except FileNotFoundError:
            result = None
    if result is None:
        result = spectrum(n, workers=args.workers, max_n=args.max_n)
        if args.cache:
            save_cache(result, args.cache)
    if args.format == "json":
        print(result.to_json())
    else:
        _print_spectrum_table(n, result.witnesses, result.counts, args.format,
                              f" ({result.total_enumerated} permutations)")
    return EXIT_OK


def _parse_range(text: str) -> list[int]:
    for sep in ("..", "-", ":"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            lo, hi = int(lo), int(hi)
            if lo > hi:
                raise UsageError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
    return [int(text)]


def cmd_verify(args) -> int:
    try:
        tid = THEOREM_ALIASES[args.theorem]
    except KeyError:
        raise UsageError(
            f"unknown theorem {args.theorem!r}; choose from {', '.join(THEOREM_ALIASES)}"
        ) from None
    try:
        ns = _parse_range(args.n_range)
    except ValueError:
        raise UsageError(f"cannot parse range {args.n_range!r}") from None
    failed = False
    for n in ns:
        result = None
        if args.cache:
            try:
                result = load_cache(n, args.cache)
            except FileNotFoundError:
                pass
        if result is None:
            result = spectrum(n, workers=args.workers, max_n=args.max_n)
            if args.cache:
                save_cache(result, args.cache)
        outcome = verify(tid, n, result=result)
        print(outcome.line())
        failed |= not outcome.passed
    return EXIT_FAILED if failed else EXIT_OK


def cmd_witness(args) -> int:
    try:
        w = witness(args.n, args.d)
    except ValueError as exc:
        raise UsageError(f"refused: {exc}") from None
    d = analyze(w).complexity
    if args.format == "json":
        print(json.dumps({"n": args.n, "d": d, "w": w.one_line()}))
    else:
        print(f"{w.one_line()}, verified d={d}")
    return EXIT_OK


def cmd_compose(args) -> int:
    alpha = parse_permutation(args.alpha)
    beta = parse_permutation(args.beta)
    w = compose_antidiagonal(alpha, beta, args.k)
    d_alpha = analyze(alpha).complexity
    d_w = analyze(w).complexity
    shrink = len(opposite_rothe(beta))
    print(f"{w.one_line()}, d={d_w} (d_alpha={d_alpha}, |D°(beta)|={shrink})")
    return EXIT_OK if d_w == d_alpha - shrink else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="msv-complexity",
        description="Complexity of the torus action on Y_w for permutations w.",
        epilog=f"Set {WORKERS_ENV} to choose the number of survey worker processes. "
        "Exit codes: 0 ok, 1 usage/parse error, 2 verification failure, 3 resource limit.",
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="full complexity report for one permutation")
    c.add_argument("perm", help='one-line notation, "3412" or "3,4,1,2"')
    c.add_argument("--format", choices=("human", "json", "csv"), default="human")
    c.add_argument("--check-rank", action="store_true",
                   help="also compute the cone dimension by exact integer rank")
    c.add_argument("--ideal", action="store_true", help="print rank conditions and minors")
    c.add_argument("--cap", type=int, default=10**4, help="max minors to list with --ideal")
    c.set_defaults(func=cmd_compute)

    r = sub.add_parser("render", help="draw diagrams as ASCII or TikZ")
    r.add_argument("perm")
    r.add_argument("--target", choices=("ascii", "tikz"), default="ascii")
    r.add_argument("--layers", default="dots,lasers,opposite_rothe",
                   help=f"comma separated subset of: {','.join(LAYERS)}")
    r.add_argument("--labels", action="store_true", help="label shaded cells")
    r.set_defaults(func=cmd_render)

    s = sub.add_parser("spectrum", help="achieved complexities over S_n")
    s.add_argument("n", type=int)
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="scan all of S_n (default)")
    mode.add_argument("--sample", type=int, metavar="N", help="analyze N random permutations")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cache", metavar="PATH", help="cache directory for exhaustive results")
    s.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    s.add_argument("--workers", type=int, default=None)
    s.add_argument("--format", choices=("human", "json", "csv"), default="human")
    s.set_defaults(func=cmd_spectrum)

    v = sub.add_parser("verify", help="check the classification statements exhaustively")
    v.add_argument("theorem", help="max, unique, spectrum or no-one")
    v.add_argument("n_range", help='one n or a range such as "4..7"')
    v.add_argument("--cache", metavar="PATH")
    v.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    v.add_argument("--workers", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("witness", help="construct a permutation of given complexity")
    w.add_argument("n", type=int)
    w.add_argument("d", type=int)
    w.add_argument("--format", choices=("human", "json"), default="human")
    w.set_defaults(func=cmd_witness)

    k = sub.add_parser("compose", help="glue beta below alpha's north-east block")
    k.add_argument("alpha")
    k.add_argument("beta")
    k.add_argument("k", type=int)
    k.set_defaults(func=cmd_compose)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SurveyLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except CacheError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
