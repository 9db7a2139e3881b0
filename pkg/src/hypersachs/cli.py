"""Command dispatch.

Exit status: 0 on success, 2 for bad invocations, 1 for any domain error or
internal consistency failure.  All numeric output goes through rational_str;
nothing is ever printed as a float except the asymptotic ratio report, which
is a decimal string by construction.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .canon import automorphisms
from .classical import charpoly_graph, harary_sachs_coeffs, threshold_search
from .errors import HypersachsError, UsageError
from .formats import (
    emit_table,
    parse_document,
    rational_str,
)
from .hypergraph import MultiHypergraph
from .rooting import assoc_coeff
from .simplex import simplex_Ck
from .traces import codegree_coefficients, trace_bruteforce, trace_d
from .veblen_enum import count_all_veblen, enumerate_connected_veblen


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse wants to sys.exit here
        raise UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="hypersachs", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add_input(sp):
        sp.add_argument("--input", required=True, help="host file, or - for stdin")

    def add_format(sp):
        sp.add_argument(
            "--format", choices=("structured", "csv", "human"), default="human"
        )

    sp = sub.add_parser("coeffs", help="codegree coefficient table of a host")
    add_input(sp)
    sp.add_argument("--max-codegree", type=int, required=True)
    sp.add_argument("--with-breakdown", action="store_true")
    sp.add_argument("--name", default=None)
    add_format(sp)
    sp.set_defaults(func=_cmd_coeffs)

    sp = sub.add_parser("traces", help="normalized power-sum traces of a host")
    add_input(sp)
    sp.add_argument("--max-order", type=int, required=True)
    sp.add_argument(
        "--bruteforce",
        action="store_true",
        help="recompute each trace by walk enumeration and verify",
    )
    sp.add_argument("--budget", type=int, default=10_000_000)
    add_format(sp)
    sp.set_defaults(func=_cmd_traces)

    sp = sub.add_parser("veblen", help="k-valent multigraph classes")
    vsub = sp.add_subparsers(dest="veblen_command", required=True)
    spe = vsub.add_parser("enumerate", help="list connected classes at one size")
    spe.add_argument("--k", type=int, required=True)
    spe.add_argument("--d", type=int, required=True)
    spe.add_argument("--with-coefficients", action="store_true")
    spe.set_defaults(func=_cmd_veblen_enumerate)
    spc = vsub.add_parser("count", help="count classes at one size")
    spc.add_argument("--k", type=int, required=True)
    spc.add_argument("--d", type=int, required=True)
    spc.set_defaults(func=_cmd_veblen_count)

    sp = sub.add_parser("assoc-coeff", help="associated coefficient of a host")
    add_input(sp)
    sp.set_defaults(func=_cmd_assoc_coeff)

    sp = sub.add_parser("simplex-ck", help="simplex constant C_k")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--report-asymptotics", action="store_true")
    add_format(sp)
    sp.set_defaults(func=_cmd_simplex)

    sp = sub.add_parser(
        "classical-check", help="graph coefficient identities, exhaustive + random"
    )
    sp.add_argument("--max-n", type=int, default=5)
    sp.add_argument("--random-graphs", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=_cmd_classical_check)

    sp = sub.add_parser("threshold", help="last nonzero codegree up to a bound")
    add_input(sp)
    sp.add_argument("--max-codegree", type=int, required=True)
    add_format(sp)
    sp.set_defaults(func=_cmd_threshold)

    sp = sub.add_parser("atlas-export", help="connected class records, one per line")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, default=None)
    sp.add_argument(
        "--max-codegree",
        type=int,
        default=None,
        help="export every size 1..D instead of a single --d",
    )
    sp.add_argument("--output", default="-")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=_cmd_atlas_export)

    return p


def _load_host(args) -> tuple[MultiHypergraph, str | None]:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        path = Path(args.input)
        if not path.exists():
            raise UsageError(f"input file {args.input} does not exist")
        text = path.read_text()
    doc = parse_document(text)
    return doc.to_hypergraph(), doc.name


def _edges_str(H: MultiHypergraph) -> str:
    if not H.edges:
        return "(empty)"
    parts = []
    for verts, mult in H.edges:
        s = " ".join(map(str, verts))
        parts.append(s + (f" x{mult}" if mult != 1 else ""))
    return "; ".join(parts)


def _atlas_lines(k: int, d: int, with_coeffs: bool, jobs: int = 1) -> list[str]:
    records = enumerate_connected_veblen(k, d, with_coeffs=False)
    if with_coeffs and records:
        from .rooting import assoc_coeff_connected

        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                coeffs = list(
                    pool.map(lambda r: assoc_coeff_connected(r.representative), records)
                )
        else:
            coeffs = [assoc_coeff_connected(r.representative) for r in records]
    else:
        coeffs = [None] * len(records)
    lines = []
    for rec, c in zip(records, coeffs):
        aut = automorphisms(rec.representative).aut_count
        value = rational_str(c) if c is not None else "-"
        lines.append(
            f"{rec.code.hexdigest()}\t{d}\t{_edges_str(rec.representative)}"
            f"\t{value}\t{aut}"
        )
    return lines


def _cmd_coeffs(args) -> int:
    host, doc_name = _load_host(args)
    name = args.name if args.name is not None else doc_name
    table = codegree_coefficients(
        host, args.max_codegree, name=name, with_breakdown=args.with_breakdown
    )
    sys.stdout.write(emit_table(table, args.format, with_breakdown=args.with_breakdown))
    return 0


def _cmd_traces(args) -> int:
    host, _ = _load_host(args)
    rows = []
    for d in range(1, args.max_order + 1):
        value = trace_d(host, d)
        if args.bruteforce:
            other = trace_bruteforce(host, d, budget=args.budget)
            if other != value:
                print(
                    f"error: trace {d} disagrees: {value} vs walk count {other}",
                    file=sys.stderr,
                )
                return 1
        rows.append((d, value))
    if args.format == "csv":
        for d, v in rows:
            print(f"{d},{rational_str(v)}")
    elif args.format == "structured":
        obj = {
            "k": host.k,
            "n": host.n,
            "traces": [{"d": d, "value": rational_str(v)} for d, v in rows],
        }
        print(json.dumps(obj, indent=2))
    else:
        for d, v in rows:
            print(f"T_{d} = {rational_str(v)}")
    return 0


def _cmd_veblen_enumerate(args) -> int:
    for line in _atlas_lines(args.k, args.d, args.with_coefficients):
        print(line)
    return 0


def _cmd_veblen_count(args) -> int:
    connected = len(enumerate_connected_veblen(args.k, args.d))
    everything = count_all_veblen(args.k, args.d)
    print(f"k={args.k} d={args.d} connected={connected} all={everything}")
    return 0


def _cmd_assoc_coeff(args) -> int:
    host, _ = _load_host(args)
    print(rational_str(assoc_coeff(host)))
    return 0


def _cmd_simplex(args) -> int:
    report = simplex_Ck(args.k)
    if args.format == "structured":
        obj = {
            "k": args.k,
            "C_k": str(report.C_k),
            "C_H": rational_str(report.C_H),
        }
        if args.report_asymptotics:
            obj["asymptotic_ratio"] = report.asymptotic_ratio
        print(json.dumps(obj, indent=2))
        return 0
    if args.format == "csv":
        print(f"{args.k},{report.C_k}")
        if args.report_asymptotics:
            print(f"ratio,{report.asymptotic_ratio}")
        return 0
    print(f"C_{args.k} = {report.C_k}")
    print(f"simplex class weight = {rational_str(report.C_H)}")
    if args.report_asymptotics:
        print(f"C_k / ((k+1)! k^(k+1)) = {report.asymptotic_ratio}")
    return 0


def _all_labeled_graphs(n: int):
    from itertools import combinations

    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield MultiHypergraph.build(
            2, n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        )


def _check_one_graph(G: MultiHypergraph) -> str | None:
    cp = charpoly_graph(G)
    for d in range(G.n + 1):
        if cp[d] != harary_sachs_coeffs(G, d):
            return f"n={G.n} edges={_edges_str(G)} d={d}"
    return None


def _cmd_classical_check(args) -> int:
    import random

    hosts = []
    for n in range(0, args.max_n + 1):
        hosts.extend(_all_labeled_graphs(n))
    exhaustive = len(hosts)
    rng = random.Random(args.seed)
    from itertools import combinations

    for _ in range(args.random_graphs):
        n = rng.randint(6, 8)
        pairs = list(combinations(range(1, n + 1), 2))
        edges = [e for e in pairs if rng.random() < 0.5]
        hosts.append(MultiHypergraph.build(2, n, edges))
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            failures = [f for f in pool.map(_check_one_graph, hosts) if f]
    else:
        failures = [f for f in map(_check_one_graph, hosts) if f]
    if failures:
        for f in failures:
            print(f"mismatch: {f}", file=sys.stderr)
        return 1
    print(
        f"checked {exhaustive} graphs on <= {args.max_n} vertices and "
        f"{args.random_graphs} random graphs on 6..8: all coefficient "
        f"expansions match the characteristic polynomial"
    )
    return 0


def _cmd_threshold(args) -> int:
    host, _ = _load_host(args)
    report = threshold_search(host, args.max_codegree)
    if args.format == "structured":
        obj = {
            "n": report.vertex_count,
            "dmax": report.dmax,
            "threshold": report.threshold,
            "witness": None if report.witness is None else rational_str(report.witness),
            "exact": report.exact,
        }
        print(json.dumps(obj, indent=2))
        return 0
    if args.format == "csv":
        th = "" if report.threshold is None else report.threshold
        wit = "" if report.witness is None else rational_str(report.witness)
        print(f"{report.vertex_count},{report.dmax},{th},{wit}")
        return 0
    print(f"host: k={host.k} n={host.n} edges: {_edges_str(host)}")
    print(report.describe())
    return 0


def _cmd_atlas_export(args) -> int:
    if (args.d is None) == (args.max_codegree is None):
        raise UsageError("give exactly one of --d or --max-codegree")
    sizes = [args.d] if args.d is not None else list(range(1, args.max_codegree + 1))
    lines = []
    for d in sizes:
        lines.extend(_atlas_lines(args.k, d, with_coeffs=True, jobs=args.jobs))
    text = "\n".join(lines) + ("\n" if lines else "")
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)
    return 0


def dispatch(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except HypersachsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))
