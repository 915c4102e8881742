"""Immutable multigraph and simple-graph values plus small-scale utilities.

Vertices and edges are dense integers ``0..n-1`` / ``0..m-1``. Loops are
rejected at construction time; parallel edges are allowed in
:class:`MultiGraph` only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from .errors import InvalidInput

Edge = tuple[int, int]


def _pair(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class MultiGraph:
    """A loopless multigraph; ``edges[e]`` is the sorted endpoint pair of edge ``e``."""

    vertex_count: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        n = self.vertex_count
        if n < 0:
            raise InvalidInput("vertex_count must be nonnegative")
        normalized = []
        for e, (u, v) in enumerate(self.edges):
            if u == v:
                raise InvalidInput(f"edge {e} is a loop on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInput(f"edge {e} = ({u}, {v}) has an endpoint outside 0..{n - 1}")
            normalized.append(_pair(u, v))
        object.__setattr__(self, "edges", tuple(normalized))

    @classmethod
    def _trusted(cls, vertex_count: int, edges: tuple[Edge, ...]) -> MultiGraph:
        # Caller guarantees sorted, in-range, loop-free pairs.
        g = object.__new__(cls)
        object.__setattr__(g, "vertex_count", vertex_count)
        object.__setattr__(g, "edges", edges)
        return g

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex, in increasing order."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append(e)
            inc[v].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def multiplicities(self) -> tuple[dict[int, int], ...]:
        """For each vertex, a map neighbor -> number of edges joining them."""
        mult: list[dict[int, int]] = [{} for _ in range(self.vertex_count)]
        for u, v in self.edges:
            mult[u][v] = mult[u].get(v, 0) + 1
            mult[v][u] = mult[v].get(u, 0) + 1
        return tuple(mult)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.multiplicities[v])

    def multiplicity(self, u: int, v: int) -> int:
        return self.multiplicities[u].get(v, 0)

    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)


@dataclass(frozen=True)
class SimpleGraph:
    """An ordinary graph stored as sorted neighbor tuples."""

    adjacency: tuple[tuple[int, ...], ...]
    _checked: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self) -> None:
        adj = tuple(tuple(sorted(nb)) for nb in self.adjacency)
        object.__setattr__(self, "adjacency", adj)
        if not self._checked:
            return
        n = len(adj)
        for v, nb in enumerate(adj):
            for i, w in enumerate(nb):
                if not 0 <= w < n:
                    raise InvalidInput(f"vertex {v} has neighbor {w} outside 0..{n - 1}")
                if w == v:
                    raise InvalidInput(f"vertex {v} is adjacent to itself")
                if i and nb[i - 1] == w:
                    raise InvalidInput(f"vertex {v} lists neighbor {w} twice")
        for v, nb in enumerate(adj):
            for w in nb:
                if v not in self.neighbor_set(w):
                    raise InvalidInput(f"adjacency is not symmetric at ({v}, {w})")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> SimpleGraph:
        """Build from an edge list; duplicates and loops raise :class:`InvalidInput`."""
        if vertex_count < 0:
            raise InvalidInput("vertex_count must be nonnegative")
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in edges:
            if u == v:
                raise InvalidInput(f"loop on vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidInput(f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")
            adj[u].append(v)
            adj[v].append(u)
        out = []
        for v, nb in enumerate(adj):
            nb.sort()
            for i in range(1, len(nb)):
                if nb[i] == nb[i - 1]:
                    raise InvalidInput(f"duplicate edge ({min(v, nb[i])}, {max(v, nb[i])})")
            out.append(tuple(nb))
        return cls._trusted(tuple(out))

    @classmethod
    def _trusted(cls, adjacency: tuple[tuple[int, ...], ...]) -> SimpleGraph:
        # Caller guarantees sorted, symmetric, irreflexive tuples.
        g = object.__new__(cls)
        object.__setattr__(g, "adjacency", adjacency)
        object.__setattr__(g, "_checked", False)
        return g

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._neighbor_sets[v]

    @cached_property
    def _neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nb) for nb in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    def edges(self) -> Iterator[Edge]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nb in enumerate(self.adjacency):
            for v in nb:
                if v > u:
                    yield (u, v)

    def edge_list(self) -> list[Edge]:
        return list(self.edges())

    def induced(self, vertices: Sequence[int]) -> SimpleGraph:
        """Induced subgraph, vertex ``vertices[i]`` relabeled to ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            adj.append(tuple(sorted(index[w] for w in self.adjacency[v] if w in index)))
        return SimpleGraph._trusted(tuple(adj))

    def as_multigraph(self) -> MultiGraph:
        return MultiGraph(self.vertex_count, tuple(self.edges()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash(self.adjacency)


AnyGraph = Union[MultiGraph, SimpleGraph]


class ParallelClass(NamedTuple):
    endpoints: Edge
    edges: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class MultiGraphIsomorphism:
    """A pair of bijections preserving incidence: ``vertex_map[v]``, ``edge_map[e]``."""

    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]

    def is_valid(self, a: MultiGraph, b: MultiGraph) -> bool:
        """Independent incidence-preservation check of this witness from ``a`` to ``b``."""
        if a.vertex_count != b.vertex_count or a.edge_count != b.edge_count:
            return False
        if len(self.vertex_map) != a.vertex_count or len(self.edge_map) != a.edge_count:
            return False
        if sorted(self.vertex_map) != list(range(b.vertex_count)):
            return False
        if sorted(self.edge_map) != list(range(b.edge_count)):
            return False
        for e, (u, v) in enumerate(a.edges):
            if b.edges[self.edge_map[e]] != _pair(self.vertex_map[u], self.vertex_map[v]):
                return False
        return True

    def inverse(self) -> MultiGraphIsomorphism:
        vinv = [0] * len(self.vertex_map)
        for v, w in enumerate(self.vertex_map):
            vinv[w] = v
        einv = [0] * len(self.edge_map)
        for e, f in enumerate(self.edge_map):
            einv[f] = e
        return MultiGraphIsomorphism(tuple(vinv), tuple(einv))


def underlying_simple(g: MultiGraph) -> tuple[SimpleGraph, tuple[int, ...]]:
    """Collapse parallel edges.

    Returns the simple graph and, for each multigraph edge, the index of its
    simple edge in ``simple.edge_list()``.
    """
    pairs = sorted(set(g.edges))
    simple = SimpleGraph.from_edges(g.vertex_count, pairs)
    index = {p: i for i, p in enumerate(pairs)}
    return simple, tuple(index[p] for p in g.edges)


def parallel_classes(g: MultiGraph) -> list[ParallelClass]:
    """Group edge ids by endpoint pair, in order of first appearance."""
    groups: dict[Edge, list[int]] = {}
    for e, p in enumerate(g.edges):
        groups.setdefault(p, []).append(e)
    return [ParallelClass(p, tuple(es)) for p, es in groups.items()]


def _neighbor_lists(g: AnyGraph) -> Sequence[Iterable[int]]:
    if isinstance(g, SimpleGraph):
        return g.adjacency
    return g.multiplicities


def components(g: AnyGraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    nbrs = _neighbor_lists(g)
    seen = bytearray(g.vertex_count)
    out = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        for v in comp:  # grows while iterating: breadth-first order
            for w in nbrs[v]:
                if not seen[w]:
                    seen[w] = 1
                    comp.append(w)
        comp.sort()
        out.append(comp)
    return out


def is_connected(g: AnyGraph) -> bool:
    """True iff ``g`` has at least one vertex and a single component."""
    if g.vertex_count == 0:
        return False
    return len(components(g)) == 1


# -- isomorphism (desk-scale oracle) ------------------------------------------


def _refine(graphs: Sequence[MultiGraph]) -> list[list[int]]:
    """Joint colour refinement so that colours are comparable across graphs."""
    colors = [[len(g.incidence[v]) for v in range(g.vertex_count)] for g in graphs]
    n_colors = len({c for cs in colors for c in cs})
    while True:
        sigs = []
        for g, cs in zip(graphs, colors):
            sigs.append([
                (cs[v], tuple(sorted((cs[w], k) for w, k in g.multiplicities[v].items())))
                for v in range(g.vertex_count)
            ])
        palette = {s: i for i, s in enumerate(sorted({s for ss in sigs for s in ss}))}
        colors = [[palette[s] for s in ss] for ss in sigs]
        if len(palette) == n_colors:
            return colors
        n_colors = len(palette)


def multigraph_isomorphic(a: MultiGraph, b: MultiGraph) -> MultiGraphIsomorphism | None:
    """Find an isomorphism from ``a`` to ``b`` or return None.

    Degree and multiplicity pruning, colour refinement, then backtracking.
    Exponential in the worst case; meant for test-oracle sizes.
    """
    n = a.vertex_count
    if n != b.vertex_count or a.edge_count != b.edge_count:
        return None
    if sorted(len(x) for x in a.incidence) != sorted(len(x) for x in b.incidence):
        return None
    if sorted(c.size for c in parallel_classes(a)) != sorted(c.size for c in parallel_classes(b)):
        return None
    ca, cb = _refine([a, b])
    if sorted(ca) != sorted(cb):
        return None

    class_size: dict[int, int] = {}
    for c in ca:
        class_size[c] = class_size.get(c, 0) + 1
    by_color: dict[int, list[int]] = {}
    for w, c in enumerate(cb):
        by_color.setdefault(c, []).append(w)

    # Static order: most already-placed neighbors first, then rarest colour.
    ma, mb = a.multiplicities, b.multiplicities
    order: list[int] = []
    placed = [False] * n
    links = [0] * n
    for _ in range(n):
        v = min((x for x in range(n) if not placed[x]),
                key=lambda x: (-links[x], class_size[ca[x]], x))
        placed[v] = True
        order.append(v)
        for w in ma[v]:
            links[w] += 1

    phi = [-1] * n
    used = [False] * n

    def fits(v: int, w: int) -> bool:
        mapped = 0
        for x, k in ma[v].items():
            if phi[x] >= 0:
                mapped += 1
                if mb[w].get(phi[x], 0) != k:
                    return False
        return mapped == sum(1 for y in mb[w] if used[y])

    def search(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in by_color[ca[v]]:
            if not used[w] and fits(v, w):
                phi[v] = w
                used[w] = True
                if search(i + 1):
                    return True
                phi[v] = -1
                used[w] = False
        return False

    if not search(0):
        return None

    b_classes: dict[Edge, list[int]] = {}
    for f, p in enumerate(b.edges):
        b_classes.setdefault(p, []).append(f)
    edge_map = [0] * a.edge_count
    for cls in parallel_classes(a):
        u, v = cls.endpoints
        for e, f in zip(cls.edges, b_classes[_pair(phi[u], phi[v])]):
            edge_map[e] = f
    return MultiGraphIsomorphism(tuple(phi), tuple(edge_map))


def simple_isomorphic(a: SimpleGraph, b: SimpleGraph) -> tuple[int, ...] | None:
    """Vertex bijection from ``a`` to ``b`` preserving adjacency, or None."""
    if a.vertex_count != b.vertex_count or a.edge_count != b.edge_count:
        return None
    iso = multigraph_isomorphic(a.as_multigraph(), b.as_multigraph())
    return None if iso is None else iso.vertex_map


def invariant_key(g: AnyGraph, rounds: int = 3) -> tuple:
    """Isomorphism-invariant hashable key, used to bucket graphs before exact checks."""
    mg = g.as_multigraph() if isinstance(g, SimpleGraph) else g
    colors = [hash((len(mg.incidence[v]), len(mg.multiplicities[v]))) for v in range(mg.vertex_count)]
    for _ in range(rounds):
        colors = [
            hash((colors[v], tuple(sorted((colors[w], k) for w, k in mg.multiplicities[v].items()))))
            for v in range(mg.vertex_count)
        ]
    return (mg.vertex_count, mg.edge_count, tuple(sorted(colors)))
