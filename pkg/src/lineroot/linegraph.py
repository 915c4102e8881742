"""Forward construction of the 1-line graph and the >=1-line graph of a multigraph.

Both builders bucket edges per endpoint and emit pairs per bucket, so they
cost O(sum of squared degrees). They are the forward oracle and are not on
the recognition path.
"""

from __future__ import annotations

from enum import Enum

from .graphs import MultiGraph, SimpleGraph


class LineMode(str, Enum):
    """Which line graph: edges sharing exactly one vertex (L1) or at least one (GEQ1)."""

    L1 = "l1"
    GEQ1 = "ge1"

    def __str__(self) -> str:
        return self.value


def _line_graph(g: MultiGraph, keep_parallel: bool) -> SimpleGraph:
    m = g.edge_count
    adj: list[set[int]] = [set() for _ in range(m)]
    for bucket in g.incidence:
        for i, e in enumerate(bucket):
            ae = adj[e]
            for f in bucket[i + 1:]:
                ae.add(f)
                adj[f].add(e)
    if not keep_parallel:
        # Pairs on the same two endpoints were emitted from both buckets; drop them.
        classes: dict[tuple[int, int], list[int]] = {}
        for e, p in enumerate(g.edges):
            classes.setdefault(p, []).append(e)
        for members in classes.values():
            if len(members) > 1:
                for e in members:
                    adj[e].difference_update(members)
    return SimpleGraph._trusted(tuple(tuple(sorted(s)) for s in adj))


def l1_line_graph(g: MultiGraph) -> SimpleGraph:
    """Edges of ``g`` adjacent iff they share exactly one endpoint."""
    return _line_graph(g, keep_parallel=False)


def geq1_line_graph(g: MultiGraph) -> SimpleGraph:
    """Edges of ``g`` adjacent iff they share at least one endpoint."""
    return _line_graph(g, keep_parallel=True)


def line_graph(g: MultiGraph, mode: LineMode | str) -> SimpleGraph:
    return l1_line_graph(g) if LineMode(mode) is LineMode.L1 else geq1_line_graph(g)
