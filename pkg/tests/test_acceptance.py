"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line
with its wall time against the allowed limit.

Run on its own with ``pytest tests/test_acceptance.py -v``; the full catalog
sweeps take a few minutes in total.
"""

import io
import time
from contextlib import contextmanager
from functools import cache
from itertools import combinations
from pathlib import Path

import pytest

from chordmat.catalog import (
    complete_bipartite,
    complete_graph,
    enumerate_simple_binary,
    fano,
    fan_graph,
    small_graphs,
    u24,
)
from chordmat.chordality import equivalence_report, find_chord, is_ell_chordal
from chordmat.cli import main
from chordmat.graphs import (
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
from chordmat.matroid import as_general
from chordmat.supersolvable import (
    MPartition,
    all_mchains,
    deformation_components,
    find_mchain,
    is_supersolvable,
    mpartition,
)

from oracles import has_chordless_long_cycle, is_two_connected

DATA = Path(__file__).resolve().parent.parent / "data"
CATALOG_R, CATALOG_N = 4, 9


@cache
def catalog():
    return [e.matroid for e in enumerate_simple_binary(CATALOG_R, CATALOG_N)]


@cache
def supersolvable_catalog():
    return [m for m in catalog() if is_supersolvable(m)]


@cache
def connected_chordal_graphs():
    return [g for g in small_graphs(6, connected=True) if is_chordal_graph(g) is not None]


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(num, title, limit):
        t0 = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            dt = time.perf_counter() - t0
            within = dt < limit
            verdict = "PASS" if ok and within else "FAIL"
            with capsys.disabled():
                print(f"\n{verdict} criterion {num:>2}: {title} ({dt:.2f}s, limit {limit:g}s)")
        assert within, f"took {dt:.1f}s, limit {limit}s"

    return run


def cli(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def test_criterion_01_fan_chain_and_partition(criterion):
    with criterion(1, "fan graph M-chain and M-partition", 1):
        code, text = cli("mchain", DATA / "fan.graph", "--all")
        assert code == 0
        assert "{} < {1} < {1,2,3} < {1,2,3,4,5} < {1,2,3,4,5,6,7}" in text.splitlines()
        code, text = cli("partition", DATA / "fan.graph")
        assert (code, text) == (0, "{1} | {2,3} | {4,5} | {6,7}\n")


def test_criterion_02_sgraph_examples(criterion):
    with criterion(2, "S-graph examples (path, K1,3, complete graphs)", 5):
        m = cycle_matroid(fan_graph())
        p = MPartition(tuple(map(frozenset, [{1}, {2, 3}, {4, 5}, {6, 7}])))
        assert sgraph_of(m, p).edges == {(1, 2), (2, 3), (3, 4)}
        q = MPartition(tuple(map(frozenset, [{4}, {3, 5}, {1, 2}, {6, 7}])))
        star = sgraph_of(m, q)
        assert graphs_isomorphic(star, complete_bipartite(1, 3))
        assert star.degree(2) == 3
        for k in (3, 4, 5):
            mk = cycle_matroid(complete_graph(k))
            chains = all_mchains(mk)
            assert chains
            for c in chains:
                assert graphs_isomorphic(sgraph_of(mk, mpartition(c)), complete_graph(k - 1))


def test_criterion_03_fano_and_k33_cocycle(criterion):
    with criterion(3, "Fano supersolvable+chordal, K3,3 cocycle chordal only", 10):
        f = fano()
        assert is_supersolvable(f) and is_ell_chordal(f, 4)
        k = cocycle_matroid(complete_bipartite(3, 3))
        assert is_ell_chordal(k, 4) and not is_supersolvable(k)


def test_criterion_04_supersolvable_implies_chordal(criterion):
    with criterion(4, f"supersolvable => chordal over catalog r<={CATALOG_R}, n<={CATALOG_N}", 600):
        bad = [m.labels for m in supersolvable_catalog() if not is_ell_chordal(m, 4)]
        assert len(catalog()) == 26385
        assert not bad


def test_criterion_05_three_way_equivalence(criterion):
    with criterion(5, "closed / chordal / generated agree for ell=2,3,4", 600):
        bad = []
        for m in catalog():
            for ell in (2, 3, 4):
                rep = equivalence_report(m, ell)
                if not rep.agree:
                    bad.append((m.columns, ell, rep))
        assert not bad, bad[:3]


def test_criterion_06_chord_iff_closure_grows(criterion):
    with criterion(6, "chord exists <=> cl(C) strictly larger; U2,4 counterexample", 60):
        for m in catalog():
            for c in m.circuits():
                has = find_chord(m, c, method="search") is not None
                assert has == (m.closure(c).elements > c), (m.columns, c)
        u = u24()
        assert find_chord(u, {1, 2, 3}) is None
        assert u.closure({1, 2, 3}).elements == {1, 2, 3, 4}


def test_criterion_07_sgraph_chordal_last_block_simplicial(criterion):
    with criterion(7, "every M-chain: S-graph chordal, last block simplicial", 600):
        chains = 0
        for m in supersolvable_catalog():
            for c in all_mchains(m):
                chains += 1
                sg = sgraph_of(m, mpartition(c))
                assert is_chordal_graph(sg.as_graph()) is not None
                adj = sg.adjacency()
                last = len(sg.blocks)
                assert all(b in adj[a] for a, b in combinations(sorted(adj[last]), 2))
        assert chains > 0


def test_criterion_08_deformation_connected(criterion):
    with criterion(8, "elementary deformations connect all M-chains", 600):
        for m in supersolvable_catalog():
            assert len(deformation_components(m)) == 1, m.columns


def test_criterion_09_graphic_supersolvable_iff_chordal(criterion):
    with criterion(9, "M(G) supersolvable <=> G chordal, connected graphs <= 6 vertices", 300):
        count = 0
        for g in small_graphs(6, connected=True):
            count += 1
            assert is_supersolvable(cycle_matroid(g)) == (is_chordal_graph(g) is not None)
        assert count == 1 + 1 + 2 + 6 + 21 + 112


def test_criterion_10_slabelings_twice_mchains(criterion):
    with criterion(10, "|S-labelings| = 2 |M-chains| on 2-connected chordal graphs", 300):
        assert (len(s_labelings(complete_graph(4))), len(all_mchains(cycle_matroid(complete_graph(4))))) == (24, 12)
        checked = 0
        for g in connected_chordal_graphs():
            if not is_two_connected(list(g.vertices), [(u, v) for _, u, v in g.edges]):
                continue
            checked += 1
            assert len(s_labelings(g)) == 2 * len(all_mchains(cycle_matroid(g)))
        assert checked > 0


def test_criterion_11_cone_recovers_graph(criterion):
    with criterion(11, "derived S-graph of the cone is isomorphic to G", 300):
        for g in connected_chordal_graphs():
            h = cone(g)
            for order in s_labelings(g):
                sg = derived_sgraph(h, [h.vertices[0]] + order)
                assert graphs_isomorphic(sg, g), (g, order)


def test_criterion_12_sgraph_embeds(criterion):
    with criterion(12, "derived S-graph embeds into G via P_i -> v_(i+1)", 300):
        for g in connected_chordal_graphs():
            h = cone(g)
            for order in s_labelings(g):
                full = [h.vertices[0]] + order
                assert subgraph_embedding_check(h, full, derived_sgraph(h, full))


def test_criterion_13_oracle_equivalences(criterion):
    with criterion(13, "span closure = circuit closure (n<=8); MCS = naive (<=7 vertices)", 300):
        for m in catalog():
            if m.n > 8:
                continue
            gm = as_general(m)
            for x in range(1 << m.n):
                assert gm.closure_mask(x) == m.closure_mask(x)
        for g in small_graphs(7):
            naive = not has_chordless_long_cycle(list(g.vertices), [(u, v) for _, u, v in g.edges])
            assert (is_chordal_graph(g) is not None) == naive


def test_first_mchain_is_listed_first():
    # the chain reported by `mchain` without --all is the first of the full list
    m = cycle_matroid(fan_graph())
    assert find_mchain(m) == all_mchains(m)[0]
