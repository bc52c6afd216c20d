"""Command-line surface tying the library together.

Exit codes: 0 success (for verify/search: valid / zero conflicts), 1 for "ran
fine but the coloring is invalid / conflicts remain", 2 for structural
problems (parse errors, unknown values, bad flags).  The distinction lets
scripts drive restart sweeps without confusing "try again" with "broken".
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bounds import SOURCE_TABLE, UnknownCodeSizeError, chromatic_lower_bound, default_table
from .coloring import class_stats, fingerprint, verify_coloring
from .files import ColoringParseError, load_coloring, save_coloring
from .fixture import q8_square_13_coloring
from .hamming import Params
from .sat import (
    EncodeOptions,
    decode_model,
    encode_coloring_cnf,
    parse_solver_model,
    write_dimacs,
)
from .search import (
    Assignment,
    SearchConfig,
    assignment_from_coloring,
    dsatur_color,
    extend_to_higher_dim,
    greedy_color,
    tabu_search,
)

MAX_PRINTED_VIOLATIONS = 20


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load(path: str):
    return load_coloring(_read_text(path))


def _fmt_distance(d) -> str:
    return "inf" if d == float("inf") else str(d)


def cmd_verify(args: argparse.Namespace) -> int:
    col = _load(args.file)
    report = verify_coloring(col)
    print(f"coloring: n={col.params.n} k={col.params.k} classes={len(col.classes)}")
    for i, s in enumerate(report.per_class, start=1):
        print(f"class {i}: size={s.size} min_distance={_fmt_distance(s.min_distance)}")
    for v in report.violations[:MAX_PRINTED_VIOLATIONS]:
        words = ",".join(map(str, v.words))
        cls = ",".join(map(str, v.classes))
        print(f"violation: {v.kind} words={words}" + (f" classes={cls}" if cls else ""))
    hidden = len(report.violations) - MAX_PRINTED_VIOLATIONS
    if hidden > 0:
        print(f"... and {hidden} more violations")
    print(f"status: {'valid' if report.valid else f'invalid ({len(report.violations)} violations)'}")
    return 0 if report.valid else 1


def cmd_bound(args: argparse.Namespace) -> int:
    result = chromatic_lower_bound(args.n, args.k)
    print(result.bound)
    detail = f"A({args.n},{args.k + 1}) = {result.max_code_size}"
    if result.source == SOURCE_TABLE:
        entry = default_table().get(args.n, args.k + 1)
        detail += f" [{entry.citation}]"
    print(f"source: {result.source}, {detail}")
    return 0


def _search_config(args: argparse.Namespace) -> SearchConfig:
    return SearchConfig(
        rng_seed=args.seed, max_iterations=args.max_iters, restarts=args.restarts
    )


def cmd_search(args: argparse.Namespace) -> int:
    params = Params(args.n, args.k, args.colors)
    if args.algo in ("greedy", "dsatur"):
        col = greedy_color(Params(args.n, args.k)) if args.algo == "greedy" else dsatur_color(
            Params(args.n, args.k)
        )
        Path(args.out).write_text(save_coloring(col))
        used = len(col.classes)
        print(f"algorithm: {args.algo}")
        print(f"colors used: {used}" + (" (above target)" if used > args.colors else ""))
        print("conflicts: 0")
        return 0
    init = None
    if args.init is not None:
        base = _load(args.init)
        if base.params.n != args.n or base.params.k != args.k:
            raise ValueError("--init coloring has different n or k")
        init = Assignment(params, assignment_from_coloring(base).color_of)
    outcome = tabu_search(params, _search_config(args), init)
    Path(args.out).write_text(save_coloring(outcome.best.to_coloring()))
    print("algorithm: tabu")
    print(f"conflicts: {outcome.conflicts}")
    print(
        f"iterations: {outcome.iterations_used} restarts: {outcome.restarts_used}"
        f" seed: {outcome.seed_used}"
    )
    return 0 if outcome.conflicts == 0 else 1


def cmd_extend(args: argparse.Namespace) -> int:
    base = _load(args.infile)
    outcome = extend_to_higher_dim(
        base, args.strategy, num_colors=args.colors, config=_search_config(args)
    )
    Path(args.out).write_text(save_coloring(outcome.best.to_coloring()))
    print(f"strategy: {args.strategy}")
    print(f"colors: {outcome.best.params.num_colors}")
    print(f"conflicts: {outcome.conflicts}")
    return 0 if outcome.conflicts == 0 else 1


def cmd_encode(args: argparse.Namespace) -> int:
    params = Params(args.n, args.k, args.colors)
    options = EncodeOptions(at_most_one=args.amo, symmetry=args.symmetry)
    formula = encode_coloring_cnf(params, options)
    Path(args.out).write_text(write_dimacs(formula))
    print(f"variables: {formula.num_vars}")
    print(f"clauses: {len(formula.clauses)}")
    return 0


def cmd_decode_model(args: argparse.Namespace) -> int:
    params = Params(args.n, args.k, args.colors)
    true_vars = parse_solver_model(_read_text(args.model))
    col = decode_model(true_vars, params)
    Path(args.out).write_text(save_coloring(col))
    print(f"decoded {len(col.classes)} classes")
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    col = _load(args.file)
    print(f"coloring: n={col.params.n} k={col.params.k} classes={len(col.classes)}")
    for i, c in enumerate(col.classes, start=1):
        s = class_stats(c)
        weights = ",".join(map(str, s.weight_distribution))
        dists = ",".join(map(str, s.distance_distribution[1:]))
        print(
            f"class {i}: size={s.size} min_distance={_fmt_distance(s.min_distance)}"
            f" weights={weights} distances={dists}"
        )
    print(f"fingerprint: {fingerprint(col).decode()}")
    return 0


def cmd_fixture(args: argparse.Namespace) -> int:
    print(save_coloring(q8_square_13_coloring()), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubecolor",
        description="Verify, bound, and search for colorings of powers of the hypercube.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a coloring file; exit 0 valid, 1 invalid")
    p.add_argument("file", help="coloring file, or - for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="packing lower bound on the chromatic number of Q_n^k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("search", help="heuristic coloring; exit 0 iff zero conflicts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--algo", choices=("greedy", "dsatur", "tabu"), default="tabu")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iters", type=int, default=100_000)
    p.add_argument("--restarts", type=int, default=0)
    p.add_argument("--init", help="coloring file to start the tabu search from")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("extend", help="lift a coloring of Q_n^k to Q_{n+1}^k")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--strategy", choices=("double", "freeze-subcube"), required=True)
    p.add_argument("--colors", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iters", type=int, default=100_000)
    p.add_argument("--restarts", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("encode", help="write a DIMACS CNF for K-colorability of Q_n^k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--symmetry", choices=("none", "fix-vertex-0", "fix-clique"), default="none")
    p.add_argument("--amo", action="store_true", help="add pairwise at-most-one clauses")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode-model", help="turn a SAT model into a coloring file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--model", required=True, help="solver output file, or - for stdin")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_decode_model)

    p = sub.add_parser("stats", help="per-class statistics and fingerprint")
    p.add_argument("file", help="coloring file, or - for stdin")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("fixture", help="write the embedded 13-coloring of Q_8^2 to stdout")
    p.set_defaults(func=cmd_fixture)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ColoringParseError, UnknownCodeSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
