"""Named constructions, exhaustive small-instance catalogs, and whole-matroid analysis."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator

import numpy as np

from .chordality import SUBSET_CAP, equivalence_report, is_ell_chordal
from .errors import ChordmatError, EnumerationCapExceeded
from .gf2 import vectors_rank
from .graphs import LabeledGraph
from .matroid import BinaryMatroid, GeneralMatroid, Matroid, satisfies_binary_circuit_law
from .supersolvable import MChain, find_mchain

MAX_R = 4
MAX_N = 10


class TheoryViolation(ChordmatError):
    """An analysis contradicted a proven implication; indicates a bug."""


# builders


def fano() -> BinaryMatroid:
    """PG(2,2): column j is the binary expansion of j, for j = 1..7."""
    return BinaryMatroid.from_columns(list(range(1, 8)), 3)


def complete_graph(k: int) -> LabeledGraph:
    if k < 1:
        raise ValueError("k must be positive")
    return LabeledGraph.from_edges(combinations(range(1, k + 1), 2), range(1, k + 1))


def complete_bipartite(a: int, b: int) -> LabeledGraph:
    left = range(1, a + 1)
    right = range(a + 1, a + b + 1)
    return LabeledGraph.from_edges(product(left, right), range(1, a + b + 1))


def cycle_graph(k: int) -> LabeledGraph:
    return LabeledGraph.from_edges([(i, i % k + 1) for i in range(1, k + 1)], range(1, k + 1))


def path_graph(k: int) -> LabeledGraph:
    return LabeledGraph.from_edges([(i, i + 1) for i in range(1, k)], range(1, k + 1))


def fan_graph() -> LabeledGraph:
    """Five vertices, seven labelled edges; v1 is adjacent to every other vertex."""
    return LabeledGraph(
        ("v1", "v2", "v3", "v4", "v5"),
        (
            (1, "v1", "v2"),
            (2, "v2", "v3"),
            (3, "v1", "v3"),
            (4, "v3", "v4"),
            (5, "v1", "v4"),
            (6, "v4", "v5"),
            (7, "v1", "v5"),
        ),
    )


def u24() -> GeneralMatroid:
    """Uniform matroid of rank 2 on 4 elements, given by its circuits."""
    return GeneralMatroid(4, combinations(range(1, 5), 3))


def builders() -> dict:
    return {
        "fano": fano,
        "complete_graph": complete_graph,
        "complete_bipartite": complete_bipartite,
        "cycle_graph": cycle_graph,
        "path_graph": path_graph,
        "fan_graph": fan_graph,
        "u24": u24,
    }


# binary matroid catalog


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    matroid: Matroid
    provenance: str


def column_key(rank: int, columns) -> str:
    return f"r{rank}:" + ",".join(str(c) for c in sorted(columns))


@lru_cache(maxsize=None)
def _gl_point_action(r: int) -> np.ndarray:
    """Row g gives the image of every vector 0..2^r-1 under the g-th element of GL(r,2)."""
    vecs = range(1, 1 << r)
    bases = [b for b in product(vecs, repeat=r) if vectors_rank(b) == r]
    table = np.zeros((len(bases), 1 << r), dtype=np.int64)
    for g, images in enumerate(bases):
        for p in range(1, 1 << r):
            img = 0
            for i in range(r):
                if (p >> i) & 1:
                    img ^= images[i]
            table[g, p] = img
    return table


def enumerate_simple_binary(
    max_r: int = 3, max_n: int = 7, dedup: str = "columns", max_r_cap: int = MAX_R,
    max_n_cap: int = MAX_N,
) -> Iterator[CatalogEntry]:
    """Stream every simple binary matroid of rank 1..max_r on at most max_n elements.

    Each is a spanning set of nonzero vectors of GF(2)^r. ``dedup="columns"``
    keeps every distinct column set; ``dedup="linear"`` keeps one
    representative per GL(r,2)-orbit, i.e. per isomorphism class.
    """
    if max_r > max_r_cap or max_n > max_n_cap:
        raise EnumerationCapExceeded(f"catalog (r<={max_r}, n<={max_n}) exceeds cap")
    if dedup not in ("columns", "linear"):
        raise ValueError(f"unknown dedup mode {dedup!r}")
    for r in range(1, max_r + 1):
        points = list(range(1, 1 << r))
        action = _gl_point_action(r) if dedup == "linear" else None
        seen: set[int] = set()
        for k in range(r, min(max_n, len(points)) + 1):
            for cols in combinations(points, k):
                if vectors_rank(cols) != r:
                    continue
                if action is not None:
                    mask = sum(1 << c for c in cols)
                    if mask in seen:
                        continue
                    orbit = np.bitwise_or.reduce(np.left_shift(1, action[:, list(cols)]), axis=1)
                    seen.update(int(x) for x in np.unique(orbit))
                m = BinaryMatroid.from_columns(list(cols), r)
                yield CatalogEntry(column_key(r, cols), m, f"PG({r - 1},2) subset, n={k}")


def small_graphs(max_vertices: int = 6, connected: bool | None = None) -> Iterator[LabeledGraph]:
    """Every simple graph on 1..max_vertices vertices up to isomorphism (max 7)."""
    import networkx as nx

    if max_vertices > 7:
        raise EnumerationCapExceeded("graph atlas covers at most 7 vertices")
    for h in nx.graph_atlas_g():
        k = h.number_of_nodes()
        if k == 0 or k > max_vertices:
            continue
        if connected is not None and nx.is_connected(h) != connected:
            continue
        edges = sorted(tuple(sorted((u + 1, v + 1))) for u, v in h.edges())
        yield LabeledGraph.from_edges(edges, range(1, k + 1))


# analysis

ELLS = (2, 3, 4)


@dataclass
class AnalysisReport:
    simple: bool
    binary: bool
    rank: int
    n: int
    circuit_count: int
    chordal: bool | None = None
    ell_chordal: dict = field(default_factory=dict)
    supersolvable: bool | None = None
    mchain: MChain | None = None
    equivalence: dict = field(default_factory=dict)  # ell -> EquivalenceReport

    def to_text(self) -> str:
        yn = {True: "yes", False: "no", None: "n/a"}
        lines = [
            f"elements:       {self.n}",
            f"rank:           {self.rank}",
            f"simple:         {yn[self.simple]}",
            f"binary:         {yn[self.binary]}",
            f"circuits:       {self.circuit_count}",
            f"chordal:        {yn[self.chordal]}",
        ]
        for ell, v in sorted(self.ell_chordal.items()):
            lines.append(f"{ell}-chordal:      {yn[v]}")
        lines.append(f"supersolvable:  {yn[self.supersolvable]}")
        if self.mchain is not None:
            lines.append(f"M-chain:        {self.mchain}")
        for ell, rep in sorted(self.equivalence.items()):
            lines.append(
                f"ell={ell}: {ell}-closed={yn[rep.ell_closed]} "
                f"{ell + 2}-chordal={yn[rep.chordal_ell2]} "
                f"generated-by-{ell + 1}-circuits={yn[rep.delta_generated]}"
            )
        return "\n".join(lines) + "\n"

    def to_kv(self) -> str:
        def v(x):
            if x is None:
                return "none"
            if isinstance(x, bool):
                return str(x).lower()
            return str(x)

        items = [
            ("n", self.n), ("rank", self.rank), ("simple", self.simple),
            ("binary", self.binary), ("circuit_count", self.circuit_count),
            ("chordal", self.chordal), ("supersolvable", self.supersolvable),
            ("mchain", self.mchain),
        ]
        for ell, b in sorted(self.ell_chordal.items()):
            items.append((f"ell_chordal.{ell}", b))
        for ell, rep in sorted(self.equivalence.items()):
            items.append((f"equivalence.{ell}.ell_closed", rep.ell_closed))
            items.append((f"equivalence.{ell}.chordal_ell2", rep.chordal_ell2))
            items.append((f"equivalence.{ell}.delta_generated", rep.delta_generated))
        return "".join(f"{k}={v(x)}\n" for k, x in items)


def analyze(entry) -> AnalysisReport:
    """Run every check on a matroid (or CatalogEntry) and cross-check the
    implications that must hold for binary input."""
    m = entry.matroid if isinstance(entry, CatalogEntry) else entry
    binary = isinstance(m, BinaryMatroid) or satisfies_binary_circuit_law(m)
    report = AnalysisReport(
        simple=m.is_simple(), binary=binary, rank=m.rank, n=m.n,
        circuit_count=len(m.circuit_masks),
    )
    if not report.simple:
        return report
    report.chordal = is_ell_chordal(m, 4)
    report.ell_chordal = {ell: is_ell_chordal(m, ell) for ell in (4, 5, 6)}
    report.mchain = find_mchain(m)
    report.supersolvable = report.mchain is not None
    if binary and m.n <= SUBSET_CAP:
        report.equivalence = {ell: equivalence_report(m, ell) for ell in ELLS}
    if binary:
        if report.supersolvable and not report.chordal:
            raise TheoryViolation("binary supersolvable matroid that is not chordal")
        for rep in report.equivalence.values():
            if not rep.agree:
                raise TheoryViolation(f"equivalence fails at ell={rep.ell}: {rep}")
    return report


__all__ = [
    "AnalysisReport", "CatalogEntry", "TheoryViolation", "analyze", "builders",
    "column_key", "complete_bipartite", "complete_graph", "cycle_graph",
    "enumerate_simple_binary", "fano", "fan_graph", "path_graph", "small_graphs", "u24",
]
