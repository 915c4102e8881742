"""Line-oriented text formats for graphs and reconstructed roots.

Graphs::

    # comment
    mgraph <n> <m>        (or: graph <n> <m> for a simple graph)
    e <u> <v>             (m lines, 0-based vertices)

Roots::

    root <n> <m> mode=<l1|ge1>
    e <edge_id> <u> <v>   (edge id order)
    map <gamma_vertex> <edge_id>   (vertex order)
"""

from __future__ import annotations

from typing import Iterator

from .errors import InvalidInput, MalformedInput
from .graphs import MultiGraph, SimpleGraph
from .linegraph import LineMode
from .reconstruct import RootResult


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line.split()


def _ints(tokens: list[str], number: int) -> list[int]:
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise MalformedInput(f"expected integers, got {' '.join(tokens)!r}", number) from None
    if any(v < 0 for v in values):
        raise MalformedInput("negative value", number)
    return values


def _parse_edges(text: str, headers: tuple[str, ...]) -> tuple[str, int, list[tuple[int, int]]]:
    lines = _lines(text)
    try:
        number, head = next(lines)
    except StopIteration:
        raise MalformedInput("empty input", 1) from None
    if head[0] not in headers or len(head) != 3:
        raise MalformedInput(f"expected header '{headers[0]} <n> <m>'", number)
    n, m = _ints(head[1:], number)
    edges = []
    last = number
    for number, tokens in lines:
        last = number
        if tokens[0] != "e" or len(tokens) != 3:
            raise MalformedInput("expected 'e <u> <v>'", number)
        u, v = _ints(tokens[1:], number)
        if u == v:
            raise MalformedInput(f"loop on vertex {u}", number)
        if u >= n or v >= n:
            raise MalformedInput(f"vertex index out of range 0..{n - 1}", number)
        edges.append((u, v))
        if len(edges) > m:
            raise MalformedInput(f"more than the declared {m} edges", number)
    if len(edges) != m:
        raise MalformedInput(f"declared {m} edges, found {len(edges)}", last)
    return head[0], n, edges


def parse_multigraph(text: str) -> MultiGraph:
    """Parse ``mgraph``/``graph`` text; repeated edges become parallel edges."""
    _, n, edges = _parse_edges(text, ("mgraph", "graph"))
    return MultiGraph(n, tuple(edges))


def parse_simple_graph(text: str) -> SimpleGraph:
    """Parse ``graph`` text (``mgraph`` is accepted if it has no repeated edge)."""
    seen: set[tuple[int, int]] = set()
    lines = _lines(text)
    _, n, edges = _parse_edges(text, ("graph", "mgraph"))
    # Recover the line of the first duplicate for the error message.
    edge_lines = [number for number, tokens in lines if tokens[0] == "e"]
    for (u, v), number in zip(edges, edge_lines):
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise MalformedInput(f"duplicate edge {key[0]} {key[1]}", number)
        seen.add(key)
    return SimpleGraph.from_edges(n, edges)


def format_multigraph(g: MultiGraph) -> str:
    out = [f"mgraph {g.vertex_count} {g.edge_count}"]
    out += [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(out) + "\n"


def format_simple_graph(g: SimpleGraph) -> str:
    out = [f"graph {g.vertex_count} {g.edge_count}"]
    out += [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


def emit_root(r: RootResult, vertex_labels: list[int] | None = None) -> str:
    """Serialize a root; ``vertex_labels`` renames the gamma vertices in map lines."""
    root = r.root
    out = [f"root {root.vertex_count} {root.edge_count} mode={LineMode(r.mode).value}"]
    out += [f"e {e} {u} {v}" for e, (u, v) in enumerate(root.edges)]
    for v, e in enumerate(r.vertex_to_edge):
        label = v if vertex_labels is None else vertex_labels[v]
        out.append(f"map {label} {e}")
    return "\n".join(out) + "\n"


def parse_root(text: str) -> RootResult:
    """Inverse of :func:`emit_root` (with default labels)."""
    lines = _lines(text)
    try:
        number, head = next(lines)
    except StopIteration:
        raise MalformedInput("empty input", 1) from None
    if head[0] != "root" or len(head) != 4 or not head[3].startswith("mode="):
        raise MalformedInput("expected header 'root <n> <m> mode=<l1|ge1>'", number)
    n, m = _ints(head[1:3], number)
    try:
        mode = LineMode(head[3][len("mode="):])
    except ValueError:
        raise MalformedInput(f"unknown mode {head[3]!r}", number) from None
    edges: list[tuple[int, int]] = []
    mapping: dict[int, int] = {}
    for number, tokens in lines:
        if tokens[0] == "e" and len(tokens) == 4:
            e, u, v = _ints(tokens[1:], number)
            if e != len(edges):
                raise MalformedInput("edge ids must be consecutive from 0", number)
            if u == v:
                raise MalformedInput(f"loop on vertex {u}", number)
            if u >= n or v >= n:
                raise MalformedInput("vertex index out of range", number)
            edges.append((u, v))
        elif tokens[0] == "map" and len(tokens) == 3:
            x, e = _ints(tokens[1:], number)
            if x in mapping or e >= m:
                raise MalformedInput("bad map line", number)
            mapping[x] = e
        else:
            raise MalformedInput("expected 'e <id> <u> <v>' or 'map <v> <id>'", number)
    if len(edges) != m or sorted(mapping) != list(range(m)) or sorted(mapping.values()) != list(range(m)):
        raise MalformedInput("edge or map lines do not match the header", number)
    try:
        root = MultiGraph(n, tuple(edges))
    except InvalidInput as exc:
        raise MalformedInput(str(exc)) from None
    vertex_to_edge = tuple(mapping[x] for x in range(len(mapping)))
    index: dict[tuple[int, int], int] = {}
    class_of = tuple(index.setdefault(root.edges[e], len(index)) for e in vertex_to_edge)
    return RootResult(mode, root, vertex_to_edge, class_of)
