"""Command-line front end.

Exit codes: 0 success, 1 negative verdict from a check, 2 input error,
3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from pathlib import Path

from . import catalog
from .chordality import (
    chordless_circuit,
    delta_closure,
    find_chord,
    is_ell_chordal,
)
from .errors import ChordmatError, EnumerationCapExceeded, InputError
from .fileio import read_input
from .graphs import (
    LabeledGraph,
    cocycle_matroid,
    cone,
    cycle_matroid,
    derived_sgraph,
    graphs_isomorphic,
    is_chordal_graph,
    s_labelings,
    sgraph_of,
    subgraph_embedding_check,
)
from .matroid import fmt_set
from .supersolvable import all_mchains, find_mchain, mpartition

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _load_matroid(args):
    obj = read_input(args.input)
    if isinstance(obj, LabeledGraph):
        return cocycle_matroid(obj) if getattr(args, "cocycle", False) else cycle_matroid(obj)
    return obj


def _load_graph(path):
    obj = read_input(path)
    if not isinstance(obj, LabeledGraph):
        raise InputError("this command needs a .graph file")
    return obj


def cmd_analyze(args, out):
    report = catalog.analyze(_load_matroid(args))
    out.write(report.to_kv() if args.format == "kv" else report.to_text())
    return EXIT_OK


def cmd_circuits(args, out):
    m = _load_matroid(args)
    for c in m.circuits():
        out.write(fmt_set(c) + "\n")
    return EXIT_OK


def cmd_mchain(args, out):
    m = _load_matroid(args)
    chains = all_mchains(m) if args.all else [c for c in [find_mchain(m)] if c is not None]
    if not chains:
        out.write("not supersolvable\n")
        return EXIT_NEGATIVE
    for c in chains:
        out.write(str(c) + "\n")
    return EXIT_OK


def cmd_partition(args, out):
    m = _load_matroid(args)
    c = find_mchain(m)
    if c is None:
        out.write("not supersolvable\n")
        return EXIT_NEGATIVE
    out.write(str(mpartition(c)) + "\n")
    return EXIT_OK


def cmd_sgraph(args, out):
    m = _load_matroid(args)
    c = find_mchain(m)
    if c is None:
        out.write("not supersolvable\n")
        return EXIT_NEGATIVE
    sg = sgraph_of(m, mpartition(c))
    for i, b in enumerate(sg.blocks, 1):
        out.write(f"P{i} = {fmt_set(b)}\n")
    for i, j in sorted(sg.edges):
        out.write(f"P{i} P{j}\n")
    if args.dot:
        Path(args.dot).write_text(sg.to_dot())
    return EXIT_OK


def cmd_chordal(args, out):
    m = _load_matroid(args)
    if not is_ell_chordal(m, args.ell):
        bad = chordless_circuit(m, args.ell)
        out.write(f"{args.ell}-chordal: no\n")
        out.write(f"circuit without chord: {fmt_set(bad)}\n")
        return EXIT_NEGATIVE
    out.write(f"{args.ell}-chordal: yes\n")
    for c in m.circuits():
        if len(c) >= args.ell:
            out.write(f"{fmt_set(c)}: {find_chord(m, c, method='search')}\n")
    return EXIT_OK


def cmd_delta_closure(args, out):
    m = _load_matroid(args)
    circuits = m.circuits()
    closed = delta_closure(m, circuits.at_most(args.ell + 1))
    for c in closed:
        out.write(fmt_set(c) + "\n")
    equal = closed == circuits
    out.write(f"equals all circuits: {'yes' if equal else 'no'} ({len(closed)}/{len(circuits)})\n")
    return EXIT_OK if equal else EXIT_NEGATIVE


def cmd_slabel(args, out):
    g = _load_graph(args.input)
    if args.count:
        out.write(f"{len(s_labelings(g))}\n")
        return EXIT_OK
    order = is_chordal_graph(g)
    if order is None:
        out.write("not chordal\n")
        return EXIT_NEGATIVE
    out.write(" ".join(str(v) for v in order) + "\n")
    return EXIT_OK


def cmd_cone(args, out):
    g = _load_graph(args.input)
    order = is_chordal_graph(g)
    if order is None:
        out.write("not chordal\n")
        return EXIT_NEGATIVE
    h = cone(g)
    if not args.check:
        out.write(f"vertices {' '.join(map(str, h.vertices))}\n")
        for lab, u, v in h.edges:
            out.write(f"{lab} {u} {v}\n")
        return EXIT_OK
    orders = s_labelings(g) if args.all else [order]
    failures = 0
    for o in orders:
        sg = derived_sgraph(h, [h.vertices[0]] + list(o))
        ok = graphs_isomorphic(sg, g) and subgraph_embedding_check(h, [h.vertices[0]] + list(o), sg)
        if not ok:
            failures += 1
            out.write(f"FAIL for S-labeling {' '.join(map(str, o))}\n")
    out.write(f"checked {len(orders)} S-labeling(s): {'ok' if not failures else 'FAILED'}\n")
    return EXIT_OK if not failures else EXIT_NEGATIVE


def cmd_catalog(args, out):
    counts = Counter()
    for entry in catalog.enumerate_simple_binary(args.max_r, args.max_n, dedup=args.dedup):
        try:
            rep = catalog.analyze(entry)
        except catalog.TheoryViolation as exc:
            counts["violations"] += 1
            out.write(f"{entry.id} VIOLATION {exc}\n")
            continue
        counts["total"] += 1
        counts["chordal"] += rep.chordal
        counts["supersolvable"] += rep.supersolvable
        counts["chordal, not supersolvable"] += rep.chordal and not rep.supersolvable
        if args.report:
            out.write(
                f"{entry.id} n={rep.n} r={rep.rank} chordal={int(rep.chordal)} "
                f"supersolvable={int(rep.supersolvable)}\n"
            )
    out.write(f"{'matroids':<28}{counts['total']:>8}\n")
    for key in ("chordal", "supersolvable", "chordal, not supersolvable", "violations"):
        out.write(f"{key:<28}{counts[key]:>8}\n")
    return EXIT_NEGATIVE if counts["violations"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chordmat", description="Chordal and supersolvable binary matroids.")
    sub = p.add_subparsers(dest="command", required=True)

    def matroid_cmd(name, func, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("input", help=".gf2, .circ or .graph file")
        kind = s.add_mutually_exclusive_group()
        kind.add_argument("--cycle", action="store_true", help="graph input: cycle matroid (default)")
        kind.add_argument("--cocycle", action="store_true", help="graph input: cocycle matroid")
        s.set_defaults(func=func)
        return s

    s = matroid_cmd("analyze", cmd_analyze, "full analysis report")
    s.add_argument("--format", choices=("text", "kv"), default="text")
    matroid_cmd("circuits", cmd_circuits, "list circuits")
    s = matroid_cmd("mchain", cmd_mchain, "first (or every) M-chain")
    s.add_argument("--all", action="store_true")
    matroid_cmd("partition", cmd_partition, "M-partition of the first M-chain")
    s = matroid_cmd("sgraph", cmd_sgraph, "S-graph of the first M-chain")
    s.add_argument("--dot", metavar="OUT", help="write Graphviz DOT to OUT")
    s = matroid_cmd("chordal", cmd_chordal, "ell-chordality verdict")
    s.add_argument("--ell", type=int, default=4)
    s = matroid_cmd("delta-closure", cmd_delta_closure, "split-closure of the small circuits")
    s.add_argument("--ell", type=int, required=True)

    s = sub.add_parser("slabel", help="an S-labeling of a chordal graph")
    s.add_argument("input")
    s.add_argument("--count", action="store_true", help="count all S-labelings")
    s.set_defaults(func=cmd_slabel)

    s = sub.add_parser("cone", help="cone over a chordal graph")
    s.add_argument("input")
    s.add_argument("--check", action="store_true", help="check the derived S-graph of the cone")
    s.add_argument("--all", action="store_true", help="with --check, use every S-labeling")
    s.set_defaults(func=cmd_cone)

    s = sub.add_parser("catalog", help="sweep all small simple binary matroids")
    s.add_argument("--max-r", type=int, default=3)
    s.add_argument("--max-n", type=int, default=7)
    s.add_argument("--dedup", choices=("columns", "linear"), default="columns")
    s.add_argument("--report", action="store_true", help="one line per matroid")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except catalog.TheoryViolation as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ChordmatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
