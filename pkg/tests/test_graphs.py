from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from seqcm.graphs import (
    Graph,
    GraphError,
    build_graph,
    build_two_pentagon_H,
    canonical_form,
    chordless_cycles,
    complete_graph,
    cycle_graph,
    disjoint_union,
    enumerate_graphs,
    induced_p3,
    induced_subgraph,
    is_cycle_graph,
    is_disjoint_union_complete,
    is_very_well_covered,
    is_woodroofe,
    minimal_vertex_covers,
    path_graph,
    suspension_of_cycle,
    _components_are_cliques,
)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, tuple(p for p, k in zip(pairs, keep) if k))


def induced_cycles_bruteforce(G):
    out = set()
    for k in range(3, G.n + 1):
        for W in combinations(range(G.n), k):
            H, _ = induced_subgraph(G, W)
            if is_cycle_graph(H):
                out.add(frozenset(W))
    return out


def test_build_graph_normalizes():
    G = build_graph(3, [(1, 0), (2, 1), (0, 1)])
    assert G.edges == ((0, 1), (1, 2))
    assert build_graph(1, []).edges == ()
    assert len(build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).edges) == 5


@pytest.mark.parametrize("n, edges", [(3, [(0, 0)]), (3, [(0, 3)]), (2, [(-1, 0)])])
def test_build_graph_rejects(n, edges):
    with pytest.raises(GraphError):
        build_graph(n, edges)


def test_induced_subgraph():
    P, relabel = induced_subgraph(cycle_graph(5), [1, 2, 3])
    assert P.edges == path_graph(3).edges
    assert relabel == {1: 0, 2: 1, 3: 2}
    K = complete_graph(4)
    for W in combinations(range(4), 3):
        assert induced_subgraph(K, W)[0] == complete_graph(3)
    with pytest.raises(GraphError):
        induced_subgraph(K, [4])


@given(graphs())
def test_induced_subgraph_on_all_vertices_is_identity(G):
    assert canonical_form(induced_subgraph(G, range(G.n))[0]) == canonical_form(G)


def test_chordless_cycles_examples():
    assert [len(c) for c in chordless_cycles(cycle_graph(6), 4)] == [6]
    assert chordless_cycles(complete_graph(4), 4) == []
    C5_chord = Graph(5, cycle_graph(5).edges + ((0, 2),))
    assert sorted(len(c) for c in chordless_cycles(C5_chord, 3)) == [3, 4]
    with pytest.raises(ValueError):
        chordless_cycles(C5_chord, 2)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_chordless_cycles_match_bruteforce(G):
    found = chordless_cycles(G, 3)
    assert len(found) == len(set(map(frozenset, found)))
    assert set(map(frozenset, found)) == induced_cycles_bruteforce(G)
    for c in found:
        H, relabel = induced_subgraph(G, c)
        assert is_cycle_graph(H)
        # consecutive vertices of the reported cycle are adjacent
        assert all(G.has_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))


def test_woodroofe_examples():
    assert not is_woodroofe(cycle_graph(4))
    assert is_woodroofe(cycle_graph(5))
    assert not is_woodroofe(cycle_graph(6))
    assert is_woodroofe(complete_graph(5))
    assert is_woodroofe(path_graph(6))


def test_disjoint_union_complete_examples():
    assert is_disjoint_union_complete(disjoint_union(complete_graph(3), complete_graph(2)))
    assert not is_disjoint_union_complete(path_graph(3))
    assert not is_disjoint_union_complete(cycle_graph(5))
    assert induced_p3(path_graph(3)) == (0, 1, 2)


def test_classifiers_on_all_small_graphs():
    for n in range(1, 7):
        for G in enumerate_graphs(n):
            holes = chordless_cycles(G, 4)
            assert _components_are_cliques(G) == (induced_p3(G) is None)
            assert is_disjoint_union_complete(G) == (not holes and induced_p3(G) is None)


def test_woodroofe_is_hereditary():
    for n in range(1, 7):
        for G in enumerate_graphs(n):
            if not is_woodroofe(G):
                continue
            for k in range(1, n):
                for W in combinations(range(n), k):
                    assert is_woodroofe(induced_subgraph(G, W)[0])


def test_canonical_form_examples():
    assert canonical_form(Graph(3, ((0, 1), (1, 2)))) == canonical_form(Graph(3, ((0, 2), (1, 2))))
    assert canonical_form(path_graph(3)) != canonical_form(complete_graph(3))
    assert canonical_form(Graph(2)) == bytes([2]) + b"0"
    with pytest.raises(GraphError):
        canonical_form(Graph(10))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6), st.randoms(use_true_random=False))
def test_canonical_form_is_isomorphism_invariant(G, rnd):
    perm = list(range(G.n))
    rnd.shuffle(perm)
    H = Graph(G.n, tuple((perm[u], perm[v]) for u, v in G.edges))
    assert canonical_form(G) == canonical_form(H)


def _nx_classes(n):
    reps = []
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from(p for j, p in enumerate(pairs) if mask >> j & 1)
        if not any(nx.is_isomorphic(g, r) for r in reps):
            reps.append(g)
    return len(reps)


@pytest.mark.parametrize("n, expected", [(1, 1), (3, 4), (4, 11)])
def test_enumerate_graph_counts(n, expected):
    # expected counts frozen from a networkx isomorphism dedup of all labeled graphs
    assert _nx_classes(n) == expected
    assert len(enumerate_graphs(n)) == expected


def test_enumerate_graphs_is_complete_and_unique():
    for n in range(1, 6):
        reps = enumerate_graphs(n)
        forms = [canonical_form(G) for G in reps]
        assert len(set(forms)) == len(forms)
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            G = Graph(n, tuple(p for j, p in enumerate(pairs) if mask >> j & 1))
            assert forms.count(canonical_form(G)) == 1
    assert [len(enumerate_graphs(n)) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]


def test_vertex_covers():
    assert minimal_vertex_covers(complete_graph(2)) == [frozenset({0}), frozenset({1})]
    assert is_very_well_covered(complete_graph(2))
    assert minimal_vertex_covers(path_graph(3)) == [frozenset({1}), frozenset({0, 2})]
    assert not is_very_well_covered(path_graph(3))
    assert is_very_well_covered(suspension_of_cycle(4))


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_vertex_covers_bruteforce(G):
    def covers(S):
        return all(u in S or v in S for u, v in G.edges)
    expected = set()
    for k in range(G.n + 1):
        for S in combinations(range(G.n), k):
            S = frozenset(S)
            if covers(S) and not any(covers(S - {v}) for v in S):
                expected.add(S)
    assert set(minimal_vertex_covers(G)) == expected


def test_constructions():
    S4 = suspension_of_cycle(4)
    assert (S4.n, len(S4.edges)) == (8, 8)
    S3 = suspension_of_cycle(3)
    assert (S3.n, len(S3.edges)) == (6, 6)
    H = build_two_pentagon_H()
    assert (H.n, len(H.edges)) == (10, 11)
    assert H.has_edge(0, 5)
    with pytest.raises(GraphError):
        suspension_of_cycle(2)
