"""Edge-labeled graphs, their cycle and cocycle matroids, S-labelings and S-graphs.

Convention: an S-labeling is a vertex order v1, ..., vm in which the
neighbours of each vi among v1, ..., v(i-1) form a clique. This is the
reverse of the usual perfect-elimination order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .errors import (
    EnumerationCapExceeded,
    InvalidChain,
    InvalidPartition,
    InvalidSLabel,
    NotConnected,
    NotSimple,
    NotSimpleGraph,
)
from .gf2 import GF2Matrix
from .matroid import BinaryMatroid, Matroid, fmt_set
from .supersolvable import MChain, MPartition, chain_from_partition, check_mchain, mpartition

SLABEL_CAP = 10  # max vertices for exhaustive S-labeling search
ISO_CAP = 10  # max vertices for brute-force isomorphism


@dataclass(frozen=True)
class LabeledGraph:
    vertices: tuple
    edges: tuple  # (label, u, v), sorted by label; labels are 1..n

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        edges = tuple(sorted(((int(lab), u, v) for lab, u, v in self.edges), key=lambda e: e[0]))
        object.__setattr__(self, "edges", edges)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex")
        if [e[0] for e in edges] != list(range(1, len(edges) + 1)):
            raise ValueError("edge labels must be exactly 1..n")
        vs = set(self.vertices)
        for lab, u, v in edges:
            if u not in vs or v not in vs:
                raise ValueError(f"edge {lab} has an endpoint outside the vertex set")

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence], vertices: Iterable | None = None) -> "LabeledGraph":
        """Build from ``(u, v)`` pairs (labelled in order) or ``(label, u, v)`` triples."""
        edges = [tuple(e) for e in edges]
        if edges and all(len(e) == 2 for e in edges):
            edges = [(i, u, v) for i, (u, v) in enumerate(edges, 1)]
        elif not all(len(e) == 3 for e in edges):
            raise ValueError("edges must be all pairs or all triples")
        if vertices is None:
            vertices = []
            for _, u, v in sorted(edges, key=lambda e: e[0]):
                for x in (u, v):
                    if x not in vertices:
                        vertices.append(x)
        return cls(tuple(vertices), tuple(edges))

    @property
    def n(self) -> int:
        return len(self.edges)

    def edge(self, label: int) -> tuple:
        _, u, v = self.edges[label - 1]
        return u, v

    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for _, u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def is_simple(self) -> bool:
        seen = set()
        for _, u, v in self.edges:
            if u == v:
                return False
            key = frozenset((u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = self.adjacency()
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def has_edge(self, u, v) -> bool:
        return any({a, b} == {u, v} for _, a, b in self.edges)

    def induced_edges(self, vs: Iterable) -> frozenset:
        """Labels of edges with both endpoints in ``vs``."""
        vs = set(vs)
        return frozenset(lab for lab, u, v in self.edges if u in vs and v in vs)


@dataclass(frozen=True)
class SGraph:
    blocks: tuple  # P_1, ..., P_r
    edges: frozenset  # pairs (i, j), 1-based block indices, i < j

    @property
    def order(self) -> int:
        return len(self.blocks)

    def adjacency(self) -> dict:
        adj = {i: set() for i in range(1, len(self.blocks) + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def degree(self, i: int) -> int:
        return sum(1 for e in self.edges if i in e)

    def as_graph(self) -> LabeledGraph:
        """The S-graph as a plain graph on vertices 1..r."""
        return LabeledGraph.from_edges(sorted(self.edges), range(1, len(self.blocks) + 1))

    def to_dot(self, name: str = "S") -> str:
        lines = [f"graph {name} {{"]
        for i, b in enumerate(self.blocks, 1):
            lines.append(f'  P{i} [label="P{i} {fmt_set(b)}"];')
        for i, j in sorted(self.edges):
            lines.append(f"  P{i} -- P{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=512)
def cycle_matroid(g: LabeledGraph) -> BinaryMatroid:
    """Column ``label`` is the vertex-incidence vector of edge ``label``."""
    index = {v: i for i, v in enumerate(g.vertices)}
    cols = []
    for _, u, v in g.edges:
        cols.append((1 << index[u]) ^ (1 << index[v]))
    return BinaryMatroid(GF2Matrix.from_columns(cols, len(g.vertices)))


def cocycle_matroid(g: LabeledGraph) -> BinaryMatroid:
    if not g.is_connected():
        raise NotConnected("cocycle matroid needs a connected graph")
    return cycle_matroid(g).dual()


def _require_simple(g: LabeledGraph):
    if not g.is_simple():
        raise NotSimpleGraph("graph has loops or multiple edges")


def is_slabeling(g: LabeledGraph, order: Sequence) -> bool:
    if len(order) != len(g.vertices) or set(order) != set(g.vertices):
        return False
    adj = g.adjacency()
    placed = set()
    for v in order:
        earlier = [w for w in adj[v] if w in placed]
        for a, b in combinations(earlier, 2):
            if b not in adj[a]:
                return False
        placed.add(v)
    return True


def mcs_order(g: LabeledGraph) -> list:
    """Maximum-cardinality search visit order; ties go to the earliest vertex."""
    adj = g.adjacency()
    weight = {v: 0 for v in g.vertices}
    order = []
    left = list(g.vertices)
    while left:
        best = max(left, key=lambda v: weight[v])  # max keeps the first maximum
        left.remove(best)
        order.append(best)
        for w in adj[best]:
            if w in weight:
                weight[w] += 1
        del weight[best]
    return order


def is_chordal_graph(g: LabeledGraph) -> list | None:
    """An S-labeling of ``g`` if it is chordal, else None."""
    _require_simple(g)
    order = mcs_order(g)
    return order if is_slabeling(g, order) else None


def s_labelings(g: LabeledGraph) -> list[list]:
    """All S-labelings, lexicographic in vertex position."""
    _require_simple(g)
    if len(g.vertices) > SLABEL_CAP:
        raise EnumerationCapExceeded(f"{len(g.vertices)} vertices exceeds cap {SLABEL_CAP}")
    adj = g.adjacency()
    verts = g.vertices
    out = []
    prefix: list = []
    placed: set = set()

    def extend():
        if len(prefix) == len(verts):
            out.append(list(prefix))
            return
        for v in verts:
            if v in placed:
                continue
            earlier = [w for w in adj[v] if w in placed]
            if all(b in adj[a] for a, b in combinations(earlier, 2)):
                prefix.append(v)
                placed.add(v)
                extend()
                placed.discard(v)
                prefix.pop()

    extend()
    return out


def slabel_to_mchain(g: LabeledGraph, order: Sequence) -> MChain:
    """F_i = edges spanned by the first i+1 vertices of the S-labeling."""
    if not is_slabeling(g, order):
        raise InvalidSLabel("order is not an S-labeling of the graph")
    if not g.is_connected():
        raise InvalidSLabel("graph must be connected")
    flats = [g.induced_edges(order[: i + 1]) for i in range(len(order))]
    try:
        return check_mchain(cycle_matroid(g), flats)
    except InvalidChain as exc:
        raise InvalidSLabel(str(exc)) from exc


def sgraph_of(m: Matroid, p: MPartition) -> SGraph:
    """Blocks are adjacent iff some nontrivial line meets both."""
    if not m.is_simple():
        raise NotSimple("matroid has loops or parallel elements")
    union = frozenset().union(*p.blocks) if p.blocks else frozenset()
    if sum(len(b) for b in p.blocks) != len(union) or union != m.ground_set:
        raise InvalidPartition("blocks must partition the ground set")
    if any(not b for b in p.blocks):
        raise InvalidPartition("empty block")
    try:
        check_mchain(m, chain_from_partition(p))
    except InvalidChain as exc:
        raise InvalidPartition(f"partition does not come from an M-chain: {exc}") from exc
    block_masks = [m.to_mask(b) for b in p.blocks]
    edges = set()
    for line in m.line_masks:
        hit = [i for i, b in enumerate(block_masks, 1) if line & b]
        for i, j in combinations(hit, 2):
            edges.add((i, j))
    return SGraph(tuple(p.blocks), frozenset(edges))


def derived_sgraph(g: LabeledGraph, order: Sequence) -> SGraph:
    chain = slabel_to_mchain(g, order)
    return sgraph_of(cycle_matroid(g), mpartition(chain))


def subgraph_embedding_check(g: LabeledGraph, order: Sequence, sg: SGraph) -> bool:
    """Does every S-graph edge {P_i, P_j} map to the graph edge {v_(i+1), v_(j+1)}?"""
    adj = g.adjacency()
    for i, j in sg.edges:
        if j >= len(order) or order[j] not in adj[order[i]]:
            return False
    return True


def cone(g: LabeledGraph, apex: Hashable | None = None) -> LabeledGraph:
    """Add an apex joined to every vertex; it is listed first, and its edges
    get labels n+1, n+2, ... in vertex order."""
    if apex is None:
        if all(isinstance(v, str) for v in g.vertices):
            apex = "v0"
            while apex in g.vertices:
                apex += "'"
        else:
            apex = 0
            while apex in g.vertices:
                apex -= 1
    if apex in g.vertices:
        raise ValueError(f"apex {apex!r} already a vertex")
    n = g.n
    new_edges = [(n + i, v, apex) for i, v in enumerate(g.vertices, 1)]
    return LabeledGraph((apex,) + g.vertices, g.edges + tuple(new_edges))


def _simple_form(g) -> tuple[int, list[set[int]]]:
    if isinstance(g, SGraph):
        adj = g.adjacency()
        keys = sorted(adj)
    elif isinstance(g, LabeledGraph):
        adj = g.adjacency()
        keys = list(g.vertices)
    else:
        keys, edges = g
        keys = list(keys)
        adj = {v: set() for v in keys}
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
    pos = {v: i for i, v in enumerate(keys)}
    return len(keys), [{pos[w] for w in adj[v] if w != v} for v in keys]


def graphs_isomorphic(g1, g2) -> bool:
    """Brute-force isomorphism test for small simple graphs.

    Accepts LabeledGraph, SGraph, or a ``(vertices, edge_pairs)`` tuple.
    """
    n1, a1 = _simple_form(g1)
    n2, a2 = _simple_form(g2)
    if n1 != n2:
        return False
    if n1 > ISO_CAP:
        raise EnumerationCapExceeded(f"{n1} vertices exceeds cap {ISO_CAP}")
    if sorted(map(len, a1)) != sorted(map(len, a2)):
        return False
    if sum(map(len, a1)) != sum(map(len, a2)):
        return False
    # map vertices of g1 in decreasing-degree order
    order = sorted(range(n1), key=lambda v: -len(a1[v]))
    image = [-1] * n1
    used = [False] * n2

    def extend(k):
        if k == n1:
            return True
        v = order[k]
        for w in range(n2):
            if used[w] or len(a2[w]) != len(a1[v]):
                continue
            if all((image[u] in a2[w]) == (u in a1[v]) for u in order[:k]):
                image[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                used[w] = False
        image[v] = -1
        return False

    return extend(0)
