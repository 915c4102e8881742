"""Root multigraph reconstruction for 1-line and >=1-line graphs.

Pipeline for a connected graph G:

1. twin partition of G (false twins for L1, true twins for GEQ1);
2. quotient graph on the twin classes, taken implicitly as the subgraph
   induced by the class representatives;
3. simple root of the quotient (K3 resolved to the triangle);
4. lift: vertex v of G becomes a root edge on the endpoints of the simple
   root edge of its class, so a class of size s yields s parallel edges.

Root edge ``e`` is created for vertex ``e`` of G, so ``vertex_to_edge`` of a
fresh result is the identity.
"""

from __future__ import annotations

import gc
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Collection, NamedTuple, Sequence

from .errors import CannotLift, InvalidInput, NotALineGraph, NotLineGraph
from .graphs import MultiGraph, MultiGraphIsomorphism, SimpleGraph, is_connected, parallel_classes
from .linegraph import LineMode, geq1_line_graph, l1_line_graph
from .twins import false_twin_partition, true_twin_partition
from .whitney import induced_line_graph_root


@dataclass(frozen=True)
class RootResult:
    mode: LineMode
    root: MultiGraph
    vertex_to_edge: tuple[int, ...]
    class_of: tuple[int, ...]


class Delta0Witness(NamedTuple):
    """Vertices x, y hanging off z with every edge at x or y inside {x, y, z}."""

    x: int
    y: int
    z: int


@contextmanager
def _gc_paused():
    # The pipeline allocates millions of small tuples on large inputs;
    # generational collections over them make the run superlinear.
    enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


def reconstruct_root(gamma: SimpleGraph, mode: LineMode | str) -> RootResult:
    """Canonical root of ``gamma`` in the given mode.

    In L1 mode the root never has exactly four vertices; in GEQ1 mode it is
    Delta0-free. Raises :class:`NotLineGraph` if no root exists and
    :class:`InvalidInput` if ``gamma`` is empty or disconnected.
    """
    mode = LineMode(mode)
    with _gc_paused():
        return _reconstruct(gamma, mode)


def _reconstruct(gamma: SimpleGraph, mode: LineMode) -> RootResult:
    n = gamma.vertex_count
    if n == 0:
        raise InvalidInput("graph has no vertices")

    if mode is LineMode.L1:
        partition = false_twin_partition(gamma)
    else:
        partition = true_twin_partition(gamma)
    skip = None
    if not partition.is_trivial():
        skip = bytearray(n)
        for members in partition.classes:
            for v in members[1:]:
                skip[v] = 1
    try:
        simple = induced_line_graph_root(gamma, skip)
    except NotALineGraph as exc:
        # The quotient of a disconnected graph never has a cover.
        if not is_connected(gamma):
            raise InvalidInput("graph is disconnected") from None
        raise NotLineGraph(f"twin quotient is not a line graph ({exc})") from exc

    class_edge = simple.vertex_to_edge
    root = MultiGraph._trusted(simple.root.vertex_count, tuple(map(class_edge.__getitem__, partition.class_of)))
    result = RootResult(mode, root, tuple(range(n)), partition.class_of)

    # A twin-free quotient always lifts to a canonical root.
    if mode is LineMode.L1 and root.vertex_count == 4:
        raise AssertionError("L1 root on four vertices")
    # Delta0 depends on neighbor sets only, which the simple root shares.
    if mode is LineMode.GEQ1 and _find_delta0(simple.root.adjacency) is not None:
        raise AssertionError("GEQ1 root contains Delta0")
    return result


def _line_pair_count(g: MultiGraph, mode: LineMode) -> int:
    total = sum(len(inc) * (len(inc) - 1) // 2 for inc in g.incidence)
    same = sum(c.size * (c.size - 1) // 2 for c in parallel_classes(g))
    # A parallel pair is counted once at each endpoint.
    return total - 2 * same if mode is LineMode.L1 else total - same


def verify(gamma: SimpleGraph, r: RootResult) -> bool:
    """True iff the mode line graph of ``r.root``, transported along the map, is ``gamma``."""
    root = r.root
    mapping = r.vertex_to_edge
    n = gamma.vertex_count
    if len(mapping) != n or root.edge_count != n or sorted(mapping) != list(range(n)):
        return False
    edges = root.edges
    l1 = r.mode is LineMode.L1
    for x, nb in enumerate(gamma.adjacency):
        a, b = edges[mapping[x]]
        for y in nb:
            if y < x:
                continue
            c, d = edges[mapping[y]]
            shared = (a == c or a == d) + (b == c or b == d)
            if shared == 0 or (l1 and shared == 2):
                return False
    return _line_pair_count(root, r.mode) == gamma.edge_count


def find_delta0(g: MultiGraph) -> Delta0Witness | None:
    """First Delta0 in ``g`` (by smallest x, then y), or None if Delta0-free.

    Only vertices with at most two distinct neighbors can play x or y:
    either x and y are both pendant on the same z, or x, y, z form a
    triangle in which x and y have no further neighbors.
    """
    return _find_delta0(g.multiplicities)


def _find_delta0(mult: Sequence[Collection[int]]) -> Delta0Witness | None:
    pendant_at: dict[int, int] = {}
    best: Delta0Witness | None = None
    for x, nb in enumerate(mult):
        if len(nb) == 1:
            (z,) = nb
            if z in pendant_at:
                w = Delta0Witness(pendant_at[z], x, z)
                if best is None or w < best:
                    best = w
            else:
                pendant_at[z] = x
        elif len(nb) == 2:
            p, q = nb
            for y, z in ((p, q), (q, p)):
                if y > x and len(mult[y]) == 2 and z in mult[y]:
                    w = Delta0Witness(x, y, z)
                    if best is None or w < best:
                        best = w
    return best


def is_delta0_free(g: MultiGraph) -> bool:
    return find_delta0(g) is None


def delta0_collapse(g: MultiGraph) -> MultiGraph:
    """The Delta0-free multigraph with the same >=1-line graph as ``g``."""
    if g.edge_count == 0 or not is_connected(g):
        raise InvalidInput("delta0_collapse needs a connected multigraph with at least one edge")
    return reconstruct_root(geq1_line_graph(g), LineMode.GEQ1).root


def _four_vertex_splits(sides: Sequence[int]):
    """4-vertex multigraphs whose three perfect matchings carry ``sides`` edges each.

    Vertices 0..3; matchings {01,23}, {02,13}, {03,12}. Every 4-vertex
    multigraph collapses to the 3-vertex root with these side sizes.
    """
    matchings = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))

    def rec(i: int, acc: list[tuple[tuple[int, int], int]]):
        if i == 3:
            yield list(acc)
            return
        s = sides[i]
        p, q = matchings[i]
        for k in range(s, -1, -1):
            yield from rec(i + 1, acc + [(p, k), (q, s - k)])

    yield from rec(0, [])


def _glg_ok(g: MultiGraph) -> bool:
    mult = g.multiplicities
    for c in parallel_classes(g):
        if c.size > 2:
            return False
        if c.size == 2:
            u, v = c.endpoints
            if len(mult[u]) > 1 and len(mult[v]) > 1:
                return False
    return True


def _doubled(g: MultiGraph) -> int:
    return sum(1 for c in parallel_classes(g) if c.size > 1)


def is_generalized_line_graph(gamma: SimpleGraph) -> RootResult | None:
    """An L1 root of ``gamma`` with parallel classes of size <= 2 and every doubled
    pair having an endpoint on no other edge; None if ``gamma`` is not a
    generalized line graph.

    Besides the canonical root, the four-vertex roots sharing its line graph
    are examined when the canonical root has three vertices: the diamond's
    canonical root (triangle with one doubled side) fails the doubled-pair
    condition while the paw succeeds. Among admissible roots the one with
    the fewest doubled pairs is returned, so a simple root is preferred; the
    canonical root wins ties.
    """
    partition = false_twin_partition(gamma)
    if max(partition.sizes, default=0) > 2:
        return None
    try:
        canonical = reconstruct_root(gamma, LineMode.L1)
    except NotLineGraph:
        return None
    best: RootResult | None = canonical if _glg_ok(canonical.root) else None
    if canonical.root.vertex_count != 3 or (best is not None and _doubled(best.root) == 0):
        return best

    # Side of the 3-vertex root <-> twin class; sides map to perfect matchings.
    root = canonical.root
    side_pairs = [(0, 1), (0, 2), (1, 2)]
    side_members: list[list[int]] = [[], [], []]
    for v in range(gamma.vertex_count):
        side_members[side_pairs.index(root.edges[canonical.vertex_to_edge[v]])].append(v)
    sides = [len(m) for m in side_members]

    identity = tuple(range(gamma.vertex_count))
    for split in _four_vertex_splits(sides):
        edges: list[tuple[int, int]] = [(0, 0)] * gamma.vertex_count
        for i in range(3):
            members = iter(side_members[i])
            for pair, k in split[2 * i: 2 * i + 2]:
                for _ in range(k):
                    edges[next(members)] = pair
        candidate = MultiGraph(4, tuple(edges))
        if not is_connected(candidate) or not _glg_ok(candidate):
            continue
        if best is None or _doubled(candidate) < _doubled(best.root):
            best = RootResult(LineMode.L1, candidate, identity, canonical.class_of)
    if best is not None and not verify(gamma, best):
        raise AssertionError("four-vertex GLG root does not reproduce the graph")
    return best


def _check_graph_iso(a: SimpleGraph, b: SimpleGraph, phi: Sequence[int]) -> bool:
    n = a.vertex_count
    if b.vertex_count != n or len(phi) != n or sorted(phi) != list(range(n)):
        return False
    if a.edge_count != b.edge_count:
        return False
    return all(b.has_edge(phi[x], phi[y]) for x, y in a.edges())


def lift_isomorphism(
    gamma: SimpleGraph,
    gamma2: SimpleGraph,
    phi: Sequence[int],
    mode: LineMode | str,
) -> MultiGraphIsomorphism:
    """Isomorphism between the canonical roots of ``gamma`` and ``gamma2`` inducing ``phi``.

    The edge map transports ``phi`` along both vertex-to-edge maps; each root
    vertex goes to the common endpoint of the images of its edges. Raises
    :class:`CannotLift` if either side has no root or the transported edge
    map is not induced by any vertex map (this happens for roots whose
    underlying simple graph is K4 or K4 minus an edge in GEQ1 mode).
    """
    mode = LineMode(mode)
    if not _check_graph_iso(gamma, gamma2, phi):
        raise InvalidInput("phi is not an isomorphism between the two graphs")
    try:
        r1 = reconstruct_root(gamma, mode)
        r2 = reconstruct_root(gamma2, mode)
    except NotLineGraph as exc:
        raise CannotLift(str(exc)) from exc
    a, b = r1.root, r2.root
    if a.vertex_count != b.vertex_count:
        raise CannotLift("canonical roots have different orders")

    edge_of_vertex = [0] * gamma.vertex_count
    for v, e in enumerate(r1.vertex_to_edge):
        edge_of_vertex[e] = v
    edge_map = tuple(r2.vertex_to_edge[phi[edge_of_vertex[e]]] for e in range(a.edge_count))

    n = a.vertex_count
    candidates: list[set[int]] = []
    for v in range(n):
        common: set[int] | None = None
        for e in a.incidence[v]:
            ends = set(b.edges[edge_map[e]])
            common = ends if common is None else common & ends
        candidates.append(common or set())
    vertex_map = [-1] * n
    taken: set[int] = set()
    for v in range(n):
        if len(candidates[v]) == 1:
            vertex_map[v] = next(iter(candidates[v]))
            taken.add(vertex_map[v])
    for v in range(n):
        if vertex_map[v] < 0:
            free = sorted(candidates[v] - taken)
            if not free:
                raise CannotLift("edge map is not induced by a vertex map")
            vertex_map[v] = free[0]
            taken.add(free[0])
    iso = MultiGraphIsomorphism(tuple(vertex_map), edge_map)
    if not iso.is_valid(a, b):
        raise CannotLift("edge map is not induced by a vertex map")
    return iso
