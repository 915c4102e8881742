from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from lineroot.errors import InvalidInput
from lineroot.graphs import (
    MultiGraph,
    MultiGraphIsomorphism,
    SimpleGraph,
    components,
    invariant_key,
    is_connected,
    multigraph_isomorphic,
    parallel_classes,
    simple_isomorphic,
    underlying_simple,
)
from lineroot.oracle import random_multigraph, random_simple_graph, relabel_multigraph, relabel_simple

TRI_211 = MultiGraph(3, ((0, 1), (0, 1), (0, 2), (1, 2)))


@st.composite
def multigraphs(draw, max_vertices=7, max_edges=12):
    n = draw(st.integers(2, max_vertices))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    return MultiGraph(n, tuple(draw(st.lists(pairs, max_size=max_edges))))


def to_nx(g: MultiGraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


class TestMultiGraph:
    def test_edges_are_normalized(self):
        g = MultiGraph(3, ((1, 0), (2, 1)))
        assert g.edges == ((0, 1), (1, 2))

    def test_loops_rejected(self):
        with pytest.raises(InvalidInput, match="loop"):
            MultiGraph(2, ((0, 0),))

    def test_out_of_range_rejected(self):
        with pytest.raises(InvalidInput):
            MultiGraph(2, ((0, 2),))
        with pytest.raises(InvalidInput):
            MultiGraph(-1)

    def test_degrees_and_multiplicity(self):
        assert [TRI_211.degree(v) for v in range(3)] == [3, 3, 2]
        assert TRI_211.multiplicity(0, 1) == 2
        assert TRI_211.multiplicity(1, 0) == 2
        assert TRI_211.multiplicity(0, 2) == 1
        assert TRI_211.neighbors(2) == [0, 1]
        assert TRI_211.incidence[0] == (0, 1, 2)
        assert not TRI_211.is_simple()
        assert MultiGraph(3, ((0, 1), (1, 2))).is_simple()

    def test_equal_values_hash_alike(self):
        assert MultiGraph(2, ((1, 0),)) == MultiGraph(2, ((0, 1),))
        assert hash(MultiGraph(2, ((1, 0),))) == hash(MultiGraph(2, ((0, 1),)))


class TestSimpleGraph:
    def test_from_edges(self):
        g = SimpleGraph.from_edges(3, [(0, 1), (2, 1)])
        assert g.adjacency == ((1,), (0, 2), (1,))
        assert g.edge_count == 2
        assert g.edge_list() == [(0, 1), (1, 2)]
        assert g.has_edge(2, 1) and not g.has_edge(0, 2)

    @pytest.mark.parametrize("edges", [[(0, 1), (1, 0)], [(1, 1)], [(0, 3)]])
    def test_bad_edge_lists(self, edges):
        with pytest.raises(InvalidInput):
            SimpleGraph.from_edges(3, edges)

    def test_asymmetric_adjacency_rejected(self):
        with pytest.raises(InvalidInput):
            SimpleGraph(((1,), ()))

    def test_induced(self):
        g = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert g.induced([1, 2, 3]).edge_list() == [(0, 1), (1, 2)]


def test_underlying_simple_collapses_multiplicity():
    s, assoc = underlying_simple(MultiGraph(2, ((0, 1),) * 3))
    assert s.edge_list() == [(0, 1)]
    assert list(assoc) == [0, 0, 0]
    s, assoc = underlying_simple(TRI_211)
    assert s.edge_list() == [(0, 1), (0, 2), (1, 2)]
    assert [s.edge_list()[i] for i in assoc] == list(TRI_211.edges)
    path = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    assert underlying_simple(path.as_multigraph())[0] == path


def test_parallel_classes():
    g = MultiGraph(3, ((0, 1), (0, 1), (0, 1), (1, 2)))
    assert [c.edges for c in parallel_classes(g)] == [(0, 1, 2), (3,)]
    assert [c.endpoints for c in parallel_classes(g)] == [(0, 1), (1, 2)]
    assert sorted(c.size for c in parallel_classes(TRI_211)) == [1, 1, 2]
    assert all(c.size == 1 for c in parallel_classes(MultiGraph(3, ((0, 1), (1, 2)))))


def test_connectivity():
    p4 = MultiGraph(4, ((0, 1), (1, 2), (2, 3)))
    assert is_connected(p4) and components(p4) == [[0, 1, 2, 3]]
    two = MultiGraph(4, ((0, 1), (2, 3)))
    assert not is_connected(two) and components(two) == [[0, 1], [2, 3]]
    assert not is_connected(MultiGraph(2))
    assert not is_connected(MultiGraph(0))
    assert is_connected(MultiGraph(1))
    assert components(SimpleGraph.from_edges(5, [(3, 1), (4, 0)])) == [[0, 4], [1, 3], [2]]


class TestIsomorphism:
    def test_identity_witness(self):
        w = multigraph_isomorphic(TRI_211, TRI_211)
        assert w is not None and w.is_valid(TRI_211, TRI_211)

    def test_relabeled_sides(self):
        other = MultiGraph(3, ((0, 1), (1, 2), (1, 2), (0, 2)))
        w = multigraph_isomorphic(TRI_211, other)
        assert w is not None and w.is_valid(TRI_211, other)
        assert w.inverse().is_valid(other, TRI_211)

    def test_different_counts(self):
        assert multigraph_isomorphic(TRI_211, MultiGraph(3, ((0, 1), (0, 2), (1, 2)))) is None

    def test_invalid_witness_detected(self):
        w = MultiGraphIsomorphism((1, 0, 2), (0, 1, 2, 3))
        assert not w.is_valid(TRI_211, TRI_211)

    @given(multigraphs(), st.randoms(use_true_random=False))
    @settings(max_examples=150, deadline=None)
    def test_planted_relabeling(self, g, rng):
        vperm = list(range(g.vertex_count))
        eperm = list(range(g.edge_count))
        rng.shuffle(vperm)
        rng.shuffle(eperm)
        h = relabel_multigraph(g, vperm, eperm)
        w = multigraph_isomorphic(g, h)
        assert w is not None and w.is_valid(g, h)
        assert invariant_key(g) == invariant_key(h)

    @given(multigraphs(max_vertices=6, max_edges=8), multigraphs(max_vertices=6, max_edges=8))
    @settings(max_examples=300, deadline=None)
    def test_agrees_with_networkx(self, a, b):
        ours = multigraph_isomorphic(a, b) is not None
        assert ours == nx.is_isomorphic(to_nx(a), to_nx(b))

    def test_simple_isomorphic_agrees_with_networkx(self):
        rng = random.Random(5)
        for _ in range(300):
            n = rng.randint(1, 8)
            a = random_simple_graph(n, rng.random(), rng)
            if rng.random() < 0.5:
                perm = list(range(n))
                rng.shuffle(perm)
                b = relabel_simple(a, perm)
            else:
                b = random_simple_graph(n, rng.random(), rng)
            phi = simple_isomorphic(a, b)
            na, nb = nx.Graph(a.edge_list()), nx.Graph(b.edge_list())
            na.add_nodes_from(range(n))
            nb.add_nodes_from(range(n))
            assert (phi is not None) == nx.is_isomorphic(na, nb)
            if phi is not None:
                assert all(b.has_edge(phi[u], phi[v]) for u, v in a.edges())

    def test_larger_random_instances(self):
        for seed in range(20):
            g = random_multigraph(40, 150, seed, connected=True)
            rng = random.Random(seed)
            vperm = list(range(40))
            rng.shuffle(vperm)
            eperm = list(range(150))
            rng.shuffle(eperm)
            h = relabel_multigraph(g, vperm, eperm)
            assert multigraph_isomorphic(g, h).is_valid(g, h)
