from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from lineroot.acceptance import claw, diamond, triangle
from lineroot.errors import CannotLift, InvalidInput, NotLineGraph
from lineroot.graphs import MultiGraph, SimpleGraph, is_connected, multigraph_isomorphic, parallel_classes, simple_isomorphic
from lineroot.linegraph import LineMode, geq1_line_graph, l1_line_graph, line_graph
from lineroot.oracle import delta0_rewrite, random_multigraph, relabel_multigraph
from lineroot.reconstruct import (
    Delta0Witness,
    RootResult,
    delta0_collapse,
    find_delta0,
    is_delta0_free,
    is_generalized_line_graph,
    lift_isomorphism,
    reconstruct_root,
    verify,
)

P3 = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
P4 = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
K4_EDGES = [(u, v) for u in range(4) for v in range(u + 1, 4)]


def iso(a: MultiGraph, b: MultiGraph) -> bool:
    return multigraph_isomorphic(a, b) is not None


def banana(k: int) -> MultiGraph:
    return MultiGraph(2, ((0, 1),) * k)


def sides(g: MultiGraph) -> list[int]:
    return sorted(c.size for c in parallel_classes(g))


class TestReconstructRoot:
    def test_path_gives_doubled_path(self):
        r = reconstruct_root(P3, LineMode.L1)
        assert r.root.vertex_count == 3 and sides(r.root) == [1, 2]
        assert iso(r.root, MultiGraph(3, ((0, 1), (0, 1), (1, 2))))
        assert verify(P3, r)

    def test_diamond(self):
        r = reconstruct_root(diamond(), LineMode.L1)
        assert iso(r.root, MultiGraph(3, ((0, 1), (0, 1), (0, 2), (1, 2))))
        assert r.vertex_to_edge == (0, 1, 2, 3)
        assert r.class_of == (0, 1, 2, 0)

    def test_triangle_ge1_is_banana(self):
        r = reconstruct_root(triangle(), LineMode.GEQ1)
        assert r.root == banana(3)

    def test_claw(self):
        r = reconstruct_root(claw(), LineMode.L1)
        assert iso(r.root, MultiGraph(3, ((0, 1),) * 3 + ((1, 2),)))
        with pytest.raises(NotLineGraph):
            reconstruct_root(claw(), LineMode.GEQ1)

    def test_single_vertex(self):
        for mode in LineMode:
            assert reconstruct_root(SimpleGraph(((),)), mode).root == MultiGraph(2, ((0, 1),))

    def test_invalid(self):
        with pytest.raises(InvalidInput):
            reconstruct_root(SimpleGraph(()), LineMode.L1)
        with pytest.raises(InvalidInput):
            reconstruct_root(SimpleGraph.from_edges(3, [(0, 1)]), LineMode.L1)
        with pytest.raises(InvalidInput):
            # Disconnected and not a line graph either way.
            reconstruct_root(SimpleGraph.from_edges(5, [(0, 1), (0, 2), (0, 3)]), "ge1")

    @given(st.integers(2, 12), st.integers(0, 30), st.integers(0, 10**6))
    @settings(max_examples=300, deadline=None)
    def test_l1_round_trip(self, n, extra, seed):
        delta = random_multigraph(n, n - 1 + extra, seed, connected=True)
        gamma = l1_line_graph(delta)
        if not is_connected(gamma):
            return
        r = reconstruct_root(gamma, "l1")
        assert verify(gamma, r)
        assert r.root.vertex_count != 4
        if delta.vertex_count != 4:
            assert iso(r.root, delta)

    @given(st.integers(2, 12), st.integers(0, 30), st.integers(0, 10**6))
    @settings(max_examples=300, deadline=None)
    def test_geq1_round_trip_when_not_on_four_vertices(self, n, extra, seed):
        delta = random_multigraph(n, n - 1 + extra, seed, connected=True)
        gamma = geq1_line_graph(delta)
        r = reconstruct_root(gamma, "ge1")
        assert verify(gamma, r)
        assert is_delta0_free(r.root)
        target = delta0_rewrite(delta)[0]
        if target.vertex_count != 4:
            assert iso(r.root, target)


class TestVerify:
    def test_detects_wrong_endpoints(self):
        r = reconstruct_root(diamond(), LineMode.L1)
        edges = list(r.root.edges)
        assert edges[3] == (0, 1)
        edges[3] = (1, 2)
        bad = RootResult(r.mode, MultiGraph(3, tuple(edges)), r.vertex_to_edge, r.class_of)
        assert not verify(diamond(), bad)

    def test_detects_wrong_mode(self):
        r = reconstruct_root(diamond(), LineMode.L1)
        assert not verify(diamond(), RootResult(LineMode.GEQ1, r.root, r.vertex_to_edge, r.class_of))

    def test_detects_bad_map(self):
        r = reconstruct_root(diamond(), LineMode.L1)
        # Vertices 1 and 2 are symmetric, so swapping them is still valid.
        assert verify(diamond(), RootResult(r.mode, r.root, (0, 2, 1, 3), r.class_of))
        assert not verify(diamond(), RootResult(r.mode, r.root, (1, 0, 2, 3), r.class_of))
        assert not verify(diamond(), RootResult(r.mode, r.root, (0, 0, 1, 3), r.class_of))


class TestDelta0:
    def test_banana_is_free(self):
        assert is_delta0_free(banana(4))

    def test_triangle(self):
        assert find_delta0(MultiGraph(3, ((0, 1), (0, 2), (1, 2)))) == Delta0Witness(0, 1, 2)

    def test_path(self):
        assert is_delta0_free(P4.as_multigraph())

    def test_claw(self):
        assert find_delta0(MultiGraph(4, ((0, 1), (0, 2), (0, 3)))) == Delta0Witness(1, 2, 0)

    def test_multiplicities_allowed(self):
        g = MultiGraph(4, ((0, 2), (0, 2), (1, 2), (0, 1), (0, 1), (2, 3)))
        assert find_delta0(g) == Delta0Witness(0, 1, 2)

    def test_collapse(self):
        assert delta0_collapse(MultiGraph(3, ((0, 1), (0, 2), (1, 2)))) == banana(3)
        assert iso(delta0_collapse(MultiGraph(4, ((0, 1), (0, 2), (0, 3)))), banana(3))
        free = MultiGraph(4, ((0, 1), (1, 2), (2, 3), (1, 2)))
        assert iso(delta0_collapse(free), free)
        with pytest.raises(InvalidInput):
            delta0_collapse(MultiGraph(1))
        with pytest.raises(InvalidInput):
            delta0_collapse(MultiGraph(4, ((0, 1), (2, 3))))

    @given(st.integers(2, 9), st.integers(0, 12), st.integers(0, 10**6))
    @settings(max_examples=300, deadline=None)
    def test_rewriting_oracle(self, n, extra, seed):
        delta = random_multigraph(n, n - 1 + extra, seed, connected=True)
        rewritten, trace = delta0_rewrite(delta)
        assert is_delta0_free(rewritten)
        # Edge ids survive every move, so the labeled line graph is unchanged.
        assert geq1_line_graph(rewritten) == geq1_line_graph(delta)
        assert (not trace) == is_delta0_free(delta)
        if rewritten.vertex_count != 4:
            assert iso(delta0_collapse(delta), rewritten)


def test_geq1_roots_over_k4_are_not_unique():
    """Two Delta0-free multigraphs on K4 with the same >=1-line graph.

    The ordered weights ab, ac, ad, bc, bd, cd differ only inside the
    perfect matching {ab, cd}; the >=1-line graph cannot see that swap.
    """
    def weighted(weights):
        return MultiGraph(4, tuple(p for p, w in zip(K4_EDGES, weights) for _ in range(w)))

    a = weighted([2, 3, 4, 1, 1, 1])
    b = weighted([1, 3, 4, 1, 1, 2])
    assert is_delta0_free(a) and is_delta0_free(b)
    assert not iso(a, b)
    assert simple_isomorphic(geq1_line_graph(a), geq1_line_graph(b)) is not None
    r = reconstruct_root(geq1_line_graph(a), "ge1")
    assert verify(geq1_line_graph(a), r)
    assert iso(r.root, a) or iso(r.root, b)


class TestGeneralizedLineGraph:
    def test_diamond_gives_paw(self):
        r = is_generalized_line_graph(diamond())
        paw = MultiGraph(4, ((0, 1), (0, 2), (1, 2), (2, 3)))
        assert r is not None and iso(r.root, paw)
        assert verify(diamond(), r)

    def test_claw_is_not(self):
        assert is_generalized_line_graph(claw()) is None

    def test_simple_line_graph(self):
        r = is_generalized_line_graph(P3)
        assert r is not None and iso(r.root, P4.as_multigraph())

    def test_cocktail_party_root(self):
        # K4 minus a perfect matching's worth of edges is C4 = L1 of a 4-cycle
        # or of two doubled edges joined at a vertex.
        c4 = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        r = is_generalized_line_graph(c4)
        assert r is not None and verify(c4, r)
        assert all(c.size <= 2 for c in parallel_classes(r.root))


class TestLiftIsomorphism:
    def test_identity(self):
        w = lift_isomorphism(diamond(), diamond(), [0, 1, 2, 3], "l1")
        r = reconstruct_root(diamond(), "l1")
        assert w.vertex_map == (0, 1, 2) and w.edge_map == (0, 1, 2, 3)
        assert w.is_valid(r.root, r.root)

    def test_diamond_automorphism_swaps_simple_sides(self):
        phi = [0, 2, 1, 3]
        w = lift_isomorphism(diamond(), diamond(), phi, "l1")
        r = reconstruct_root(diamond(), "l1")
        assert w.is_valid(r.root, r.root)
        assert w.edge_map == (0, 2, 1, 3)
        simple_sides = [e for e in range(4) if r.class_of.count(r.class_of[e]) == 1]
        assert sorted(w.edge_map[e] for e in simple_sides) == simple_sides
        assert all(w.edge_map[e] != e for e in simple_sides)

    @pytest.mark.parametrize("mode", list(LineMode))
    def test_planted(self, mode):
        rng = random.Random(11)
        checked = 0
        for seed in range(300):
            n = rng.randint(2, 12)
            delta = random_multigraph(n, rng.randint(n - 1, 30), seed, connected=True)
            gamma = line_graph(delta, mode)
            if not is_connected(gamma):
                continue
            vperm = list(range(n))
            rng.shuffle(vperm)
            eperm = list(range(delta.edge_count))
            rng.shuffle(eperm)
            gamma2 = line_graph(relabel_multigraph(delta, vperm, eperm), mode)
            try:
                w = lift_isomorphism(gamma, gamma2, eperm, mode)
            except CannotLift:
                # Only roots over K4 or K4 minus an edge lack an induced lift.
                assert mode is LineMode.GEQ1 and delta.vertex_count == 4
                continue
            r1, r2 = reconstruct_root(gamma, mode), reconstruct_root(gamma2, mode)
            assert w.is_valid(r1.root, r2.root)
            for v, e in enumerate(r1.vertex_to_edge):
                assert w.edge_map[e] == r2.vertex_to_edge[eperm[v]]
            checked += 1
        assert checked > 200

    def test_octahedron_flip(self):
        oct_ = l1_line_graph(MultiGraph(4, tuple(K4_EDGES)))
        # Swap edges 01 and 23 only: an automorphism of L(K4) induced by no
        # permutation of K4's vertices.
        phi = [5, 1, 2, 3, 4, 0]
        with pytest.raises(CannotLift):
            lift_isomorphism(oct_, oct_, phi, "ge1")
        # In L1 mode the root is the triangle with doubled sides, where the
        # swap exchanges two parallel edges.
        r = reconstruct_root(oct_, "l1")
        assert lift_isomorphism(oct_, oct_, phi, "l1").is_valid(r.root, r.root)

    def test_not_a_line_graph(self):
        with pytest.raises(CannotLift):
            lift_isomorphism(claw(), claw(), [0, 1, 2, 3], "ge1")

    def test_bad_phi(self):
        with pytest.raises(InvalidInput):
            lift_isomorphism(P3, P3, [1, 0, 2], "l1")
