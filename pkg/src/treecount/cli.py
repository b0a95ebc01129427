"""Command-line front end.

Subcommands: count, verify, table, signsum, oracle, bench.  Exit status is
0 on success, 1 when a verification or cross-check finds a mismatch, and 2
for invalid usage or parameters.  Values go to stdout, one per line, as
exact decimal strings; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import formulas, oracles, signsum, verify
from .combinatorics import Count

TABLE_FAMILIES = ("complete", "bipartite", "odd-complete", "odd-bipartite")

_COMPLETE_TABLE_FNS = {
    "complete": formulas.spanning_trees_complete,
    "odd-complete": formulas.odd_spanning_trees_complete,
}
_BIPARTITE_TABLE_FNS = {
    "bipartite": formulas.spanning_trees_bipartite,
    "odd-bipartite": formulas.odd_spanning_trees_bipartite,
}


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _int_pair(text: str) -> tuple[int, int]:
    values = _int_list(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated integers, got {text!r}")
    return values[0], values[1]


def _edge_list(text: str) -> list[tuple[int, int]]:
    edges = []
    try:
        for chunk in text.split(","):
            u, v = chunk.split("-")
            edges.append((int(u), int(v)))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected edges like 1-2,2-3 got {text!r}"
        )
    return edges


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treecount",
        description="Exact spanning-tree counts with brute-force verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="print one exact count")
    count.add_argument(
        "family",
        choices=("complete", "bipartite", "odd-complete", "odd-bipartite", "degrees"),
    )
    count.add_argument("--n", type=int)
    count.add_argument("--m", type=int)
    count.add_argument("--degrees", type=_int_list, metavar="D1,D2,...")
    count.add_argument("--a", type=_int_list, metavar="A1,A2,...")
    count.add_argument("--b", type=_int_list, metavar="B1,B2,...")

    ver = sub.add_parser("verify", help="sweep formulas against oracles")
    ver.add_argument(
        "--scope",
        default=",".join(verify.ALL_SCOPES),
        help=f"comma-separated subset of {','.join(verify.ALL_SCOPES)}",
    )
    ver.add_argument("--complete-max", type=int, default=verify.DEFAULT_COMPLETE_MAX)
    ver.add_argument("--bipartite-max", type=int, default=verify.DEFAULT_BIPARTITE_MAX)
    ver.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    ver.add_argument("--jobs", type=int, default=1)
    ver.add_argument("--format", choices=("text", "jsonl"), default="text")

    table = sub.add_parser("table", help="emit a table of counts")
    table.add_argument("--family", choices=TABLE_FAMILIES, required=True)
    table.add_argument("--from", dest="start", type=int, required=True)
    table.add_argument("--to", dest="stop", type=int, required=True)
    table.add_argument("--format", choices=("csv", "jsonl"), default="csv")

    ss = sub.add_parser("signsum", help="evaluate sign-hypercube power sums")
    ss.add_argument("--coeffs", type=_int_list, required=True, metavar="A1,A2,...")
    ss.add_argument("--power", type=int, required=True)
    ss.add_argument("--mode", choices=("direct", "multinomial", "both"), default="both")

    oracle = sub.add_parser("oracle", help="run a brute-force oracle directly")
    oracle.add_argument("kind", choices=("complete", "bipartite", "matrix-tree"))
    oracle.add_argument("--n", type=int)
    oracle.add_argument("--m", type=int)
    oracle.add_argument("--odd", action="store_true", help="keep only all-odd degree profiles")
    oracle.add_argument("--degrees", type=_int_list, metavar="D1,D2,...")
    oracle.add_argument("--a", type=_int_list, metavar="A1,A2,...")
    oracle.add_argument("--b", type=_int_list, metavar="B1,B2,...")
    oracle.add_argument("--complete", type=int, metavar="N", help="matrix-tree on K_N")
    oracle.add_argument("--bipartite", type=_int_pair, metavar="M,N", help="matrix-tree on K_{M,N}")
    oracle.add_argument("--path", type=int, metavar="N")
    oracle.add_argument("--cycle", type=int, metavar="N")
    oracle.add_argument("--edges", type=_edge_list, metavar="U-V,U-V,...")
    oracle.add_argument("--vertices", type=int)

    bench = sub.add_parser("bench", help="time equivalent evaluation strategies")
    bench.add_argument(
        "task", choices=("hypercube-vs-collapse", "composition-sum", "oracle-sweep")
    )
    bench.add_argument("--n", type=int, required=True)
    bench.add_argument("--power", type=int)

    return parser


def _require(value, flag: str):
    if value is None:
        raise ValueError(f"missing required option {flag}")
    return value


def _run_count(args) -> int:
    family = args.family
    if family == "complete":
        value = formulas.spanning_trees_complete(_require(args.n, "--n"))
    elif family == "odd-complete":
        value = formulas.odd_spanning_trees_complete(_require(args.n, "--n"))
    elif family == "bipartite":
        value = formulas.spanning_trees_bipartite(
            _require(args.m, "--m"), _require(args.n, "--n")
        )
    elif family == "odd-bipartite":
        value = formulas.odd_spanning_trees_bipartite(
            _require(args.m, "--m"), _require(args.n, "--n")
        )
    else:  # degrees
        has_complete = args.degrees is not None
        has_bipartite = args.a is not None or args.b is not None
        if has_complete == has_bipartite:
            raise ValueError(
                "count degrees needs either --degrees (complete) or both --a and --b (bipartite)"
            )
        if has_complete:
            value = formulas.trees_with_degrees_complete(args.degrees)
        else:
            value = formulas.trees_with_degrees_bipartite(
                _require(args.a, "--a"), _require(args.b, "--b")
            )
    print(value)
    return 0


def _run_verify(args) -> int:
    scopes = tuple(s for s in args.scope.split(",") if s)
    report = verify.run_verification(
        scopes=scopes,
        complete_max=args.complete_max,
        bipartite_max=args.bipartite_max,
        seed=args.seed,
        jobs=args.jobs,
    )
    if args.format == "jsonl":
        print(verify.render_jsonl(report))
    else:
        print(verify.render_text(report))
    return 0 if report.all_match else 1


def table_rows(family: str, start: int, stop: int) -> list[dict]:
    """Table rows for a family over [start, stop]; counts as decimal strings."""
    if start < 1 or start > stop:
        raise ValueError(f"range must satisfy 1 <= from <= to, got {start}..{stop}")
    if family in _COMPLETE_TABLE_FNS:
        fn = _COMPLETE_TABLE_FNS[family]
        return [{"n": n, "count": str(fn(n))} for n in range(start, stop + 1)]
    fn = _BIPARTITE_TABLE_FNS[family]
    return [
        {"m": m, "n": n, "count": str(fn(m, n))}
        for m in range(start, stop + 1)
        for n in range(start, stop + 1)
    ]


def render_table(rows: list[dict], fmt: str) -> str:
    if fmt == "jsonl":
        return "\n".join(json.dumps(row, sort_keys=True) for row in rows)
    header = ",".join(rows[0].keys()) if rows else "n,count"
    lines = [header]
    lines.extend(",".join(str(v) for v in row.values()) for row in rows)
    return "\n".join(lines)


def _run_table(args) -> int:
    rows = table_rows(args.family, args.start, args.stop)
    print(render_table(rows, args.format))
    return 0


def _run_signsum(args) -> int:
    coeffs, power = args.coeffs, args.power
    if not coeffs:
        raise ValueError("--coeffs must not be empty")
    if args.mode == "direct":
        print(signsum.hypercube_power_sum(coeffs, power))
        return 0
    if args.mode == "multinomial":
        print(signsum.multinomial_power_sum(coeffs, power))
        return 0
    direct = signsum.hypercube_power_sum(coeffs, power)
    expanded = signsum.multinomial_power_sum(coeffs, power)
    print(direct)
    print(expanded)
    if direct == expanded:
        print("match")
        return 0
    print("mismatch")
    return 1


def _all_odd(degrees: Sequence[int]) -> bool:
    return all(d % 2 == 1 for d in degrees)


def _run_oracle(args) -> int:
    if args.kind == "complete":
        n = _require(args.n, "--n")
        if args.odd:
            value = oracles.count_trees_complete_brute(n, _all_odd)
        elif args.degrees is not None:
            target = tuple(args.degrees)
            value = oracles.count_trees_complete_brute(n, lambda d: d == target)
        else:
            value = oracles.count_trees_complete_brute(n)
    elif args.kind == "bipartite":
        m, n = _require(args.m, "--m"), _require(args.n, "--n")
        if args.odd:
            value = oracles.count_trees_bipartite_brute(
                m, n, lambda a, b: _all_odd(a + b)
            )
        elif args.a is not None or args.b is not None:
            target = (tuple(_require(args.a, "--a")), tuple(_require(args.b, "--b")))
            value = oracles.count_trees_bipartite_brute(
                m, n, lambda a, b: (a, b) == target
            )
        else:
            value = oracles.count_trees_bipartite_brute(m, n)
    else:  # matrix-tree
        value = oracles.matrix_tree_count(_graph_from_args(args))
    print(value)
    return 0


def _graph_from_args(args) -> oracles.LabeledGraph:
    sources = [
        args.complete is not None,
        args.bipartite is not None,
        args.path is not None,
        args.cycle is not None,
        args.edges is not None,
    ]
    if sum(sources) != 1:
        raise ValueError(
            "matrix-tree needs exactly one of --complete, --bipartite, --path,"
            " --cycle, or --edges"
        )
    if args.complete is not None:
        return oracles.LabeledGraph.complete(args.complete)
    if args.bipartite is not None:
        return oracles.LabeledGraph.complete_bipartite(*args.bipartite)
    if args.path is not None:
        return oracles.LabeledGraph.path(args.path)
    if args.cycle is not None:
        return oracles.LabeledGraph.cycle(args.cycle)
    vertices = _require(args.vertices, "--vertices")
    return oracles.LabeledGraph(vertices, args.edges)


def _timed(fn) -> tuple[Count, float]:
    start = time.perf_counter()
    value = fn()
    return value, (time.perf_counter() - start) * 1e3


def _report_strategies(results: list[tuple[str, Count, float]]) -> int:
    for name, value, elapsed in results:
        print(f"strategy={name} value={value} elapsed_ms={elapsed:.1f}")
    values = {value for _, value, _ in results}
    if len(values) == 1:
        print("match")
        return 0
    print("mismatch", file=sys.stderr)
    return 1


def _run_bench(args) -> int:
    n = args.n
    if args.task == "hypercube-vs-collapse":
        power = _require(args.power, "--power")
        ones = [1] * n
        direct, t_direct = _timed(lambda: signsum.hypercube_power_sum(ones, power))
        collapsed, t_collapsed = _timed(lambda: signsum.binomial_power_sum(n, power))
        return _report_strategies(
            [
                ("hypercube", direct, t_direct),
                ("binomial-collapse", collapsed, t_collapsed),
            ]
        )
    if args.task == "composition-sum":
        closed, t_closed = _timed(lambda: formulas.odd_spanning_trees_complete(n))
        summed, t_summed = _timed(
            lambda: formulas.odd_spanning_trees_complete_by_sum(n)
        )
        return _report_strategies(
            [
                ("binomial-form", closed, t_closed),
                ("composition-sum", summed, t_summed),
            ]
        )
    # oracle-sweep
    brute, t_brute = _timed(lambda: oracles.count_trees_complete_brute(n, _all_odd))
    formula, t_formula = _timed(lambda: formulas.odd_spanning_trees_complete(n))
    print(f"sequences={n ** (n - 2) if n >= 2 else 1}")
    return _report_strategies(
        [
            ("pruefer-sweep", brute, t_brute),
            ("closed-form", formula, t_formula),
        ]
    )


_HANDLERS = {
    "count": _run_count,
    "verify": _run_verify,
    "table": _run_table,
    "signsum": _run_signsum,
    "oracle": _run_oracle,
    "bench": _run_bench,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
