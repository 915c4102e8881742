"""Brute-force oracles and generators used by the acceptance checks.

Everything here is exhaustive or randomized and independent of the
reconstruction pipeline, apart from :func:`lineroot.reconstruct.find_delta0`
used as the Delta0 predicate.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .errors import BudgetExceeded, ConstraintUnsatisfiable, InvalidInput
from .graphs import MultiGraph, SimpleGraph, invariant_key, is_connected, multigraph_isomorphic, simple_isomorphic
from .linegraph import LineMode, line_graph
from .reconstruct import Delta0Witness, find_delta0

MAX_VERTICES = 8
MAX_EDGES = 7
MAX_SIMPLE_VERTICES = 7


class _IsoClasses:
    """Keeps one representative per isomorphism class, in insertion order."""

    def __init__(self) -> None:
        self.buckets: dict[tuple, list[MultiGraph]] = {}
        self.reps: list[MultiGraph] = []

    def add(self, g: MultiGraph) -> bool:
        bucket = self.buckets.setdefault(invariant_key(g), [])
        for h in bucket:
            if multigraph_isomorphic(g, h) is not None:
                return False
        bucket.append(g)
        self.reps.append(g)
        return True


def dedupe(graphs: Iterable[MultiGraph]) -> list[MultiGraph]:
    """One representative per isomorphism class, first occurrence wins."""
    classes = _IsoClasses()
    for g in graphs:
        classes.add(g)
    return classes.reps


@lru_cache(maxsize=None)
def connected_multigraphs_with_edges(m: int) -> tuple[MultiGraph, ...]:
    """All connected loopless multigraphs with exactly ``m`` edges, up to isomorphism.

    Every connected multigraph with m >= 1 edges is obtained from one with
    m - 1 edges by adding an edge between old vertices (drop a non-bridge) or
    a pendant edge to a new vertex (drop a leaf edge of a tree).
    """
    if m > MAX_EDGES:
        raise BudgetExceeded(f"at most {MAX_EDGES} edges")
    if m == 0:
        return (MultiGraph(1, ()),)
    classes = _IsoClasses()
    for g in connected_multigraphs_with_edges(m - 1):
        n = g.vertex_count
        for pair in combinations(range(n), 2):
            classes.add(MultiGraph(n, g.edges + (pair,)))
        for u in range(n):
            classes.add(MultiGraph(n + 1, g.edges + ((u, n),)))
    return tuple(classes.reps)


@lru_cache(maxsize=None)
def _multigraphs_on(n: int, m: int) -> tuple[MultiGraph, ...]:
    if m == 0:
        return (MultiGraph(n, ()),)
    classes = _IsoClasses()
    for g in _multigraphs_on(n, m - 1):
        for pair in combinations(range(n), 2):
            classes.add(MultiGraph(n, g.edges + (pair,)))
    return tuple(classes.reps)


def enumerate_multigraphs(
    max_vertices: int,
    max_edges: int,
    connected_only: bool,
    min_vertices: int | None = None,
) -> Iterator[MultiGraph]:
    """One multigraph per isomorphism class with at most ``max_edges`` edges.

    Vertex counts range over ``min_vertices..max_vertices``; by default only
    ``max_vertices`` itself, so ``(2, 3, True)`` yields the three bananas.
    Order: by vertex count, then edge count, then discovery.
    """
    if max_vertices > MAX_VERTICES or max_edges > MAX_EDGES:
        raise BudgetExceeded(f"budget is {MAX_VERTICES} vertices and {MAX_EDGES} edges")
    lo = max_vertices if min_vertices is None else min_vertices
    for n in range(max(lo, 0), max_vertices + 1):
        for m in range(max_edges + 1):
            if connected_only:
                if n == 0 or m < n - 1:
                    continue
                yield from (g for g in connected_multigraphs_with_edges(m) if g.vertex_count == n)
            else:
                if n == 0:
                    if m == 0:
                        yield MultiGraph(0, ())
                    continue
                if n == 1 and m > 0:
                    continue
                yield from _multigraphs_on(n, m)


@lru_cache(maxsize=None)
def _simple_graphs_on(n: int, m: int) -> tuple[SimpleGraph, ...]:
    if m == 0:
        return (SimpleGraph.from_edges(n, ()),)
    classes = _IsoClasses()
    for g in _simple_graphs_on(n, m - 1):
        edges = g.edge_list()
        present = set(edges)
        for pair in combinations(range(n), 2):
            if pair not in present:
                classes.add(MultiGraph(n, tuple(edges) + (pair,)))
    return tuple(SimpleGraph.from_edges(n, g.edges) for g in classes.reps)


def enumerate_simple_graphs(n: int, connected_only: bool = True) -> Iterator[SimpleGraph]:
    """One simple graph per isomorphism class on exactly ``n`` vertices."""
    if n > MAX_SIMPLE_VERTICES:
        raise BudgetExceeded(f"at most {MAX_SIMPLE_VERTICES} vertices")
    for m in range(n * (n - 1) // 2 + 1):
        for g in _simple_graphs_on(n, m):
            if not connected_only or is_connected(g):
                yield g


@lru_cache(maxsize=None)
def _root_index(k: int, mode: LineMode) -> dict[tuple, list[tuple[MultiGraph, SimpleGraph]]]:
    index: dict[tuple, list[tuple[MultiGraph, SimpleGraph]]] = {}
    for g in connected_multigraphs_with_edges(k):
        lg = line_graph(g, mode)
        index.setdefault(invariant_key(lg), []).append((g, lg))
    return index


def brute_force_roots(gamma: SimpleGraph, mode: LineMode | str, max_vertices: int | None = None) -> list[MultiGraph]:
    """Every connected multigraph (up to isomorphism) whose mode line graph is ``gamma``.

    Searches all connected multigraphs with ``|V(gamma)|`` edges and at most
    ``max_vertices`` vertices (default ``|V(gamma)| + 1``, enough for trees).
    """
    mode = LineMode(mode)
    k = gamma.vertex_count
    if max_vertices is None:
        max_vertices = k + 1
    if k > MAX_EDGES or max_vertices > MAX_VERTICES:
        raise BudgetExceeded(f"budget is {MAX_EDGES} edges to place and {MAX_VERTICES} vertices")
    if k == 0:
        return []
    out = []
    for g, lg in _root_index(k, mode).get(invariant_key(gamma), []):
        if g.vertex_count <= max_vertices and simple_isomorphic(lg, gamma) is not None:
            out.append(g)
    return out


def random_multigraph(
    n: int,
    m: int,
    seed: int,
    connected: bool = False,
    delta0_free: bool = False,
    max_tries: int = 1000,
) -> MultiGraph:
    """Seeded random multigraph on ``n`` vertices with ``m`` edges.

    With ``connected``, a random spanning tree is planted first; remaining
    edges go to uniformly random vertex pairs, parallel edges allowed.
    Constraints are met by rejection sampling.
    """
    if n < 2:
        raise InvalidInput("need at least two vertices")
    if connected and m < n - 1:
        raise ConstraintUnsatisfiable(f"{m} edges cannot connect {n} vertices")
    rng = random.Random(seed)
    for _ in range(max_tries):
        edges: list[tuple[int, int]] = []
        if connected:
            order = rng.sample(range(n), n)
            for i in range(1, n):
                edges.append((order[rng.randrange(i)], order[i]))
        while len(edges) < m:
            u = rng.randrange(n)
            v = rng.randrange(n - 1)
            edges.append((u, v + 1 if v >= u else v))
        g = MultiGraph(n, tuple(edges))
        if delta0_free and find_delta0(g) is not None:
            continue
        return g
    raise ConstraintUnsatisfiable(f"no sample met the constraints in {max_tries} tries")


def random_simple_graph(n: int, p: float, seed: int | random.Random, connected: bool = False,
                        max_tries: int = 1000) -> SimpleGraph:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    for _ in range(max_tries):
        edges = [pair for pair in combinations(range(n), 2) if rng.random() < p]
        g = SimpleGraph.from_edges(n, edges)
        if not connected or is_connected(g):
            return g
    raise ConstraintUnsatisfiable("no connected sample")


def relabel_simple(g: SimpleGraph, perm: list[int]) -> SimpleGraph:
    """Copy of ``g`` with vertex ``v`` renamed ``perm[v]``."""
    return SimpleGraph.from_edges(g.vertex_count, [(perm[u], perm[v]) for u, v in g.edges()])


def relabel_multigraph(g: MultiGraph, vperm: list[int], eperm: list[int]) -> MultiGraph:
    """Copy with vertex ``v`` renamed ``vperm[v]`` and edge ``e`` moved to slot ``eperm[e]``."""
    edges: list[tuple[int, int]] = [(0, 0)] * g.edge_count
    for e, (u, v) in enumerate(g.edges):
        edges[eperm[e]] = (vperm[u], vperm[v])
    return MultiGraph(g.vertex_count, tuple(edges))


def delta0_rewrite(g: MultiGraph) -> tuple[MultiGraph, list[Delta0Witness]]:
    """Remove every Delta0 by local identification moves; returns the result and the trace.

    For a witness (x, y, z) all y-z edges are moved onto x-z. If x and y were
    not adjacent, y is now isolated and is deleted (x and y identified);
    otherwise y keeps only its x-y edges and plays the fresh pendant vertex.
    Edge ids are preserved, so the >=1-line graph is unchanged as a labeled graph.
    """
    n = g.vertex_count
    edges = list(g.edges)
    trace: list[Delta0Witness] = []
    while True:
        current = MultiGraph(n, tuple(edges))
        w = find_delta0(current)
        if w is None:
            return current, trace
        trace.append(w)
        x, y, z = w
        yz = (min(y, z), max(y, z))
        xz = (min(x, z), max(x, z))
        edges = [xz if e == yz else e for e in edges]
        if all(y not in e for e in edges):
            n -= 1
            edges = [(u - (u > y), v - (v > y)) for u, v in edges]


def is_isomorphic(a: MultiGraph, b: MultiGraph) -> bool:
    return multigraph_isomorphic(a, b) is not None
