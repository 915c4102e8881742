"""Simple root reconstruction: find H with L(H) = G together with the edge map.

The root is read off a Krausz cover of G: a family of cliques ("cells")
partitioning the edges of G so that every vertex lies in exactly two cells,
pendant root edges getting a private singleton cell. Cells become root
vertices and each vertex of G becomes the root edge joining its two cells.

Once one cell C containing a vertex x is known, the other cell of x is forced:
it is ``{x} | (N(x) - C)``. The cover therefore grows from a single seed cell
by traversal in O(|V| + |E|), and a successful cover proves connectivity.

The seed is the cell through the edge ``(0, v)`` with ``v`` the smallest
neighbor of vertex 0. It holds 0, v and those common neighbors w for which
the triangle {0, v, w} is odd, i.e. some vertex sees exactly one or three of
its corners. When the root has at least five vertices, a triangle of G comes
from a star of the root iff it is odd, and a graph with seven or more
vertices can only have such roots. Smaller graphs try every clique through
``(0, v)`` as a seed and keep a successful one.

Every candidate cover is checked as a certificate before it is accepted, so a
wrong seed can only cause a rejection, never a wrong root.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, filterfalse

from .errors import InvalidInput, NotALineGraph
from .graphs import Edge, SimpleGraph, is_connected

#: Graphs up to this many vertices are solved by trying every seed cell.
SMALL_GRAPH_LIMIT = 6


class K3Policy(str, Enum):
    """Root returned for K3, the only connected graph with two simple roots."""

    TRIANGLE = "triangle"
    STAR = "star"


@dataclass(frozen=True)
class KrauszCover:
    cells: tuple[tuple[int, ...], ...]
    cell_pair_of: tuple[tuple[int, int], ...]

    def check(self, g: SimpleGraph) -> bool:
        """Independent check of the four cover invariants against ``g``."""
        n = g.vertex_count
        if len(self.cell_pair_of) != n:
            return False
        membership: list[list[int]] = [[] for _ in range(n)]
        for c, cell in enumerate(self.cells):
            if not cell:
                return False
            for x in cell:
                membership[x].append(c)
            for x, y in combinations(cell, 2):
                if not g.has_edge(x, y):
                    return False
        for x in range(n):
            if sorted(membership[x]) != sorted(self.cell_pair_of[x]) or len(membership[x]) != 2:
                return False
        if len({tuple(sorted(p)) for p in self.cell_pair_of}) != n:
            return False
        covered = 0
        for x, y in g.edges():
            shared = set(membership[x]) & set(membership[y])
            if len(shared) != 1:
                return False
            covered += 1
        return covered == sum(len(c) * (len(c) - 1) // 2 for c in self.cells)


@dataclass(frozen=True)
class SimpleRootResult:
    root: SimpleGraph
    vertex_to_edge: tuple[Edge, ...]
    cover: KrauszCover


def _grow(
    adj: tuple[tuple[int, ...], ...],
    seed: list[int],
    skip: bytearray | None = None,
) -> KrauszCover | None:
    """Grow the cover forced by ``seed``; None if the result is not a valid cover.

    Vertices marked in ``skip`` are treated as absent, so the cover is one of
    the subgraph induced by the others, renumbered in increasing order.
    """
    n = len(adj)
    first = [-1] * n
    second = [-1] * n
    # Skipped vertices stay marked, so they are filtered out of every cell.
    inside = bytearray(n) if skip is None else bytearray(skip)
    cells: list[list[int]] = [seed]
    for x in seed:
        first[x] = 0
    i = 0
    while i < len(cells):
        cell = cells[i]
        for x in cell:
            inside[x] = 1
        outside = inside.__getitem__
        for x in cell:
            if second[x] >= 0:
                continue
            other = [x, *filterfalse(outside, adj[x])]
            j = len(cells)
            cells.append(other)
            for y in other:
                if first[y] < 0:
                    first[y] = j
                elif second[y] < 0:
                    second[y] = j
                else:
                    return None
        for x in cell:
            inside[x] = 0
        i += 1

    # Certificate: with every vertex in two cells and no two vertices on the
    # same pair, the cover is valid iff N(x) = (A | B) - {x} for the cells
    # A, B of each x. The length test first keeps the sort within O(deg x).
    kept = range(n) if skip is None else [x for x in range(n) if not skip[x]]
    pairs = []
    for x in kept:
        a, b = first[x], second[x]
        if b < 0 or a == b:
            return None
        pairs.append((a, b) if a < b else (b, a))
    if len(set(pairs)) != len(pairs):
        return None
    trimmed: dict[int, tuple[int, ...]] = {}
    if skip is not None:
        for v in range(n):
            if skip[v]:
                for y in adj[v]:
                    if not skip[y] and y not in trimmed:
                        trimmed[y] = tuple(filterfalse(skip.__getitem__, adj[y]))
    for x in kept:
        nb = trimmed.get(x, adj[x])
        cell_a, cell_b = cells[first[x]], cells[second[x]]
        if len(nb) != len(cell_a) + len(cell_b) - 2:
            return None
        expected = sorted(cell_a + cell_b)
        i = bisect_left(expected, x)
        if expected[i + 1] != x:
            return None
        del expected[i:i + 2]
        if tuple(expected) != nb:
            return None
    if skip is not None:
        index = [-1] * n
        for c, x in enumerate(kept):
            index[x] = c
        cells = [list(map(index.__getitem__, cell)) for cell in cells]
    return KrauszCover(tuple(tuple(c) for c in cells), tuple(pairs))


def _is_odd(adj: tuple[tuple[int, ...], ...], tri: tuple[int, int, int], skip: bytearray | None = None) -> bool:
    seen: dict[int, int] = {}
    for t in tri:
        for y in adj[t]:
            seen[y] = seen.get(y, 0) + 1
    return any(k != 2 for y, k in seen.items() if y not in tri and not (skip and skip[y]))


def _forced_seed(adj: tuple[tuple[int, ...], ...], skip: bytearray | None = None) -> list[int]:
    """The seed used for graphs above the small-graph limit; vertex 0 must be kept."""
    nb = adj[0] if skip is None else [y for y in adj[0] if not skip[y]]
    if not nb:
        return [0]
    u, v = 0, nb[0]
    common = sorted(y for y in set(nb).intersection(adj[v]) if not (skip and skip[y]))
    return [u, v] + [w for w in common if _is_odd(adj, (u, v, w), skip)]


def _seed_candidates(g: SimpleGraph) -> list[list[int]]:
    adj = g.adjacency
    if g.vertex_count > SMALL_GRAPH_LIMIT or not adj[0]:
        return [_forced_seed(adj)]
    u, v = 0, adj[0][0]
    common = sorted(set(adj[u]).intersection(adj[v]))
    out = []
    for size in range(len(common) + 1):
        for extra in combinations(common, size):
            if all(g.has_edge(a, b) for a, b in combinations(extra, 2)):
                out.append([u, v, *extra])
    return out


def krausz_cover(
    g: SimpleGraph,
    k3_policy: K3Policy | str = K3Policy.TRIANGLE,
    *,
    check_connected: bool = True,
) -> KrauszCover:
    """Krausz cover of a connected graph, numbered in discovery order from vertex 0."""
    k3_policy = K3Policy(k3_policy)
    if g.vertex_count == 0:
        raise InvalidInput("simple root reconstruction needs a nonempty graph")
    found = []
    for seed in _seed_candidates(g):
        cover = _grow(g.adjacency, seed)
        if cover is not None:
            found.append(cover)
    # A grown cover reaches only the component of vertex 0, so success
    # implies connectivity; check it only to report the right error.
    if not found:
        if check_connected and not is_connected(g):
            raise InvalidInput("simple root reconstruction needs a connected graph")
        raise NotALineGraph("no Krausz cover exists")
    # Only K3 has covers with different cell counts (triangle: 3, star: 4).
    if k3_policy is K3Policy.TRIANGLE:
        return min(found, key=lambda c: len(c.cells))
    return max(found, key=lambda c: len(c.cells))


def simple_line_graph_root(
    g: SimpleGraph,
    k3_policy: K3Policy | str = K3Policy.TRIANGLE,
    *,
    check_connected: bool = True,
) -> SimpleRootResult:
    """Root H and bijection V(g) -> E(H) with L(H) = g.

    Raises :class:`NotALineGraph` when no simple root exists and
    :class:`InvalidInput` for empty or disconnected input.
    """
    return _root_from_cover(krausz_cover(g, k3_policy, check_connected=check_connected))


def induced_line_graph_root(g: SimpleGraph, skip: bytearray | None = None) -> SimpleRootResult:
    """Simple root (K3 as the triangle) of the subgraph induced by unmarked vertices.

    The subgraph is renumbered in increasing vertex order and vertex 0 must
    be unmarked. This is how twin quotients are rooted without building them:
    representatives increase with their class index, so the subgraph induced
    by them is the quotient. Raises :class:`NotALineGraph` if there is no
    root, including when the subgraph is disconnected.
    """
    if g.vertex_count == 0 or (skip is not None and skip[0]):
        raise InvalidInput("vertex 0 must be present")
    kept = g.vertex_count if skip is None else g.vertex_count - sum(skip)
    if kept <= SMALL_GRAPH_LIMIT:
        sub = g if skip is None else g.induced([x for x in range(g.vertex_count) if not skip[x]])
        return simple_line_graph_root(sub, K3Policy.TRIANGLE, check_connected=False)
    cover = _grow(g.adjacency, _forced_seed(g.adjacency, skip), skip)
    if cover is None:
        raise NotALineGraph("no Krausz cover exists")
    return _root_from_cover(cover)


def _root_from_cover(cover: KrauszCover) -> SimpleRootResult:
    adj: list[list[int]] = [[] for _ in cover.cells]
    for a, b in cover.cell_pair_of:
        adj[a].append(b)
        adj[b].append(a)
    root = SimpleGraph._trusted(tuple(tuple(sorted(nb)) for nb in adj))
    return SimpleRootResult(root, cover.cell_pair_of, cover)
