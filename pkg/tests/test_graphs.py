from itertools import permutations

import pytest

from chordmat.catalog import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    fan_graph,
    path_graph,
    small_graphs,
)
from chordmat.errors import InvalidPartition, InvalidSLabel, NotConnected, NotSimpleGraph
from chordmat.graphs import (
    LabeledGraph,
    SGraph,
    cocycle_matroid,
    cone,
    cycle_matroid,
    derived_sgraph,
    graphs_isomorphic,
    is_chordal_graph,
    is_slabeling,
    mcs_order,
    s_labelings,
    sgraph_of,
    slabel_to_mchain,
    subgraph_embedding_check,
)
from chordmat.supersolvable import MPartition, all_mchains, mpartition

from oracles import has_chordless_long_cycle, isomorphic_by_permutation, slabelings_by_permutation


def part(*blocks):
    return MPartition(tuple(frozenset(b) for b in blocks))


def pairs(g):
    return [(u, v) for _, u, v in g.edges]


def test_labeled_graph_validation():
    g = LabeledGraph.from_edges([(1, 2), (2, 3)])
    assert g.edge(2) == (2, 3)
    with pytest.raises(ValueError):
        LabeledGraph((1, 2), ((2, 1, 2),))
    loop = LabeledGraph.from_edges([(1, 1)])
    assert not loop.is_simple()


def test_cycle_matroid_examples():
    assert cycle_matroid(path_graph(4)).circuits().as_set() == frozenset()
    tri = cycle_matroid(cycle_graph(3))
    assert tri.circuits().as_set() == {frozenset({1, 2, 3})}
    assert cycle_matroid(fan_graph()).rank == 4
    assert cycle_matroid(complete_graph(4)).rank == 3


def test_cocycle_matroid_examples():
    k33 = cocycle_matroid(complete_bipartite(3, 3))
    assert k33.rank == 4
    sizes = sorted(len(c) for c in k33.circuits())
    assert sizes == [3] * 6 + [4] * 9 + [5] * 9
    with pytest.raises(NotConnected):
        cocycle_matroid(LabeledGraph.from_edges([(1, 2), (3, 4)]))


def test_is_chordal_graph_examples():
    assert is_chordal_graph(fan_graph()) == ["v1", "v2", "v3", "v4", "v5"]
    assert is_chordal_graph(cycle_graph(4)) is None
    assert is_chordal_graph(path_graph(5)) is not None
    with pytest.raises(NotSimpleGraph):
        is_chordal_graph(LabeledGraph.from_edges([(1, 2), (1, 2)]))


def test_mcs_against_naive_on_small_graphs():
    for g in small_graphs(5):
        verts = list(g.vertices)
        naive = not has_chordless_long_cycle(verts, pairs(g))
        assert (is_chordal_graph(g) is not None) == naive


def test_s_labelings_examples():
    assert len(s_labelings(complete_graph(4))) == 24
    assert s_labelings(cycle_graph(4)) == []
    assert s_labelings(path_graph(3)) == [[1, 2, 3], [2, 1, 3], [2, 3, 1], [3, 2, 1]]


def test_s_labelings_against_permutations():
    for g in list(small_graphs(5))[::3]:
        expect = slabelings_by_permutation(list(g.vertices), pairs(g))
        assert sorted(s_labelings(g)) == sorted(expect)
        for o in expect:
            assert is_slabeling(g, o)


def test_slabel_to_mchain():
    k4 = complete_graph(4)
    c = slabel_to_mchain(k4, [1, 2, 3, 4])
    assert [len(b) for b in mpartition(c)] == [1, 2, 3]
    with pytest.raises(InvalidSLabel):
        slabel_to_mchain(cycle_graph(4), [1, 2, 3, 4])


def test_sgraph_fan():
    fan = cycle_matroid(fan_graph())
    sg = sgraph_of(fan, part({1}, {2, 3}, {4, 5}, {6, 7}))
    assert sg.edges == {(1, 2), (2, 3), (3, 4)}
    other = sgraph_of(fan, part({4}, {3, 5}, {1, 2}, {6, 7}))
    assert other.edges == {(1, 2), (2, 3), (2, 4)}
    assert other.degree(2) == 3
    assert graphs_isomorphic(other, complete_bipartite(1, 3))


def test_sgraph_rejects_bad_partitions():
    fan = cycle_matroid(fan_graph())
    with pytest.raises(InvalidPartition):
        sgraph_of(fan, part({1}, {2, 3}, {4, 5}, {6}))
    with pytest.raises(InvalidPartition):
        sgraph_of(fan, part({1}, {2, 4}, {3, 5}, {6, 7}))


@pytest.mark.parametrize("k", [3, 4, 5])
def test_sgraph_of_complete_graph(k):
    m = cycle_matroid(complete_graph(k))
    target = complete_graph(k - 1)
    for c in all_mchains(m):
        assert graphs_isomorphic(sgraph_of(m, mpartition(c)), target)


def test_derived_sgraph_small():
    tri = complete_graph(3)
    assert graphs_isomorphic(derived_sgraph(tri, [1, 2, 3]), complete_graph(2))
    assert graphs_isomorphic(derived_sgraph(complete_graph(4), [1, 2, 3, 4]), complete_graph(3))


def test_subgraph_embedding():
    g = fan_graph()
    order = is_chordal_graph(g)
    sg = derived_sgraph(g, order)
    assert subgraph_embedding_check(g, order, sg)
    bad = SGraph(sg.blocks, frozenset({(1, 3)}))
    assert not subgraph_embedding_check(g, order, bad)


def test_cone():
    h = cone(fan_graph())
    assert h.vertices[0] == "v0"
    assert (len(h.vertices), len(h.edges)) == (6, 12)
    assert [lab for lab, *_ in h.edges] == list(range(1, 13))
    assert cone(complete_graph(3)).vertices[0] == 0
    assert graphs_isomorphic(cone(complete_graph(3)), complete_graph(4))


def test_cone_derived_sgraph_examples():
    for g in (fan_graph(), path_graph(4), complete_graph(4)):
        h = cone(g)
        for o in s_labelings(g)[:5]:
            assert graphs_isomorphic(derived_sgraph(h, [h.vertices[0]] + o), g)


def test_isomorphism_against_permutations():
    graphs = [g for g in small_graphs(5) if g.vertices]
    for g1 in graphs[::4]:
        for g2 in graphs[::7]:
            if len(g1.vertices) != len(g2.vertices):
                continue
            idx1 = {v: i for i, v in enumerate(g1.vertices)}
            idx2 = {v: i for i, v in enumerate(g2.vertices)}
            e1 = [(idx1[u], idx1[v]) for u, v in pairs(g1)]
            e2 = [(idx2[u], idx2[v]) for u, v in pairs(g2)]
            assert graphs_isomorphic(g1, g2) == isomorphic_by_permutation(len(idx1), e1, e2)


def test_isomorphism_relabel():
    g = fan_graph()
    for perm in list(permutations(g.vertices))[::17]:
        rename = dict(zip(g.vertices, perm))
        h = (list(g.vertices), [(rename[u], rename[v]) for u, v in pairs(g)])
        assert graphs_isomorphic(g, h)
    assert not graphs_isomorphic(cycle_graph(4), path_graph(4))


def test_dot_output():
    fan = cycle_matroid(fan_graph())
    dot = sgraph_of(fan, part({1}, {2, 3}, {4, 5}, {6, 7})).to_dot()
    assert dot.startswith("graph")
    assert 'P2 [label="P2 {2,3}"]' in dot
    assert "P1 -- P2" in dot and "P3 -- P4" in dot
    assert "P1 -- P3" not in dot


def test_mcs_order_ties():
    assert mcs_order(path_graph(3)) == [1, 2, 3]
