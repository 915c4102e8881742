"""False-twin and true-twin partitions and the quotient graphs they induce.

Vertices are grouped by their exact sorted open (false twins) or closed
(true twins) neighborhood tuple. Dictionary grouping over the tuples is
expected O(|V| + |E|). Class indices follow first appearance in vertex order
and each representative is the smallest vertex of its class.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum

from .graphs import SimpleGraph


class TwinKind(str, Enum):
    FALSE = "false-twin"
    TRUE = "true-twin"


@dataclass(frozen=True)
class TwinPartition:
    kind: TwinKind
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    @property
    def representative(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def is_trivial(self) -> bool:
        return len(self.classes) == len(self.class_of)


@dataclass(frozen=True)
class QuotientGraph:
    graph: SimpleGraph
    partition: TwinPartition


def _group(keys, kind: TwinKind) -> TwinPartition:
    index: dict[tuple[int, ...], int] = {}
    class_of = []
    members: list[list[int]] = []
    for v, key in enumerate(keys):
        c = index.get(key)
        if c is None:
            c = index[key] = len(members)
            members.append([])
        members[c].append(v)
        class_of.append(c)
    return TwinPartition(kind, tuple(tuple(m) for m in members), tuple(class_of))


def false_twin_partition(g: SimpleGraph) -> TwinPartition:
    """Classes of vertices with identical open neighborhoods."""
    return _group(g.adjacency, TwinKind.FALSE)


def _closed(v: int, nb: tuple[int, ...]) -> tuple[int, ...]:
    i = bisect_left(nb, v)
    return nb[:i] + (v,) + nb[i:]


def true_twin_partition(g: SimpleGraph) -> TwinPartition:
    """Classes of vertices with identical closed neighborhoods (hence pairwise adjacent)."""
    return _group((_closed(v, nb) for v, nb in enumerate(g.adjacency)), TwinKind.TRUE)


def twin_partition(g: SimpleGraph, kind: TwinKind | str) -> TwinPartition:
    kind = TwinKind(kind)
    return false_twin_partition(g) if kind is TwinKind.FALSE else true_twin_partition(g)


def quotient(g: SimpleGraph, p: TwinPartition) -> QuotientGraph:
    """Induced subgraph on the class representatives, relabeled to class indices."""
    if p.is_trivial():
        # Singleton classes are numbered in vertex order, so the quotient is g.
        return QuotientGraph(g, p)
    lookup = p.class_of.__getitem__
    adjacency = g.adjacency
    # Representatives increase with their class index, so a neighbor list made
    # of representatives only maps to a sorted tuple directly.
    non_reps = {v for members in p.classes for v in members[1:]}
    adj = []
    for c, members in enumerate(p.classes):
        nb = adjacency[members[0]]
        if non_reps.isdisjoint(nb):
            adj.append(tuple(map(lookup, nb)))
        else:
            # Twins have the same neighborhood outside their own class.
            mapped = set(map(lookup, nb))
            mapped.discard(c)
            adj.append(tuple(sorted(mapped)))
    return QuotientGraph(SimpleGraph._trusted(tuple(adj)), p)
