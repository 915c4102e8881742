"""Acceptance checks, shared by the ``selftest`` command and the test suite.

Each check returns a :class:`CriterionResult`; nothing here raises on a
failed property, so a run always reports every criterion. :data:`FULL` is the
stated scale, :data:`DESK` a quick subset for interactive use.
"""

from __future__ import annotations

import gc
import random
import statistics
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from .errors import NotLineGraph
from .graphs import MultiGraph, SimpleGraph, is_connected, multigraph_isomorphic, parallel_classes
from .linegraph import LineMode, geq1_line_graph, l1_line_graph, line_graph
from .oracle import (
    brute_force_roots,
    delta0_rewrite,
    enumerate_multigraphs,
    enumerate_simple_graphs,
    random_multigraph,
    random_simple_graph,
)
from .reconstruct import delta0_collapse, is_delta0_free, is_generalized_line_graph, reconstruct_root, verify
from .twins import TwinKind, quotient, twin_partition


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} [{self.number}] {self.title}: {self.detail}"


@dataclass(frozen=True)
class Scale:
    random_roots: int = 10_000
    random_max_vertices: int = 50
    random_max_edges: int = 200
    enum_vertices: int = 5
    enum_edges: int = 6
    uniqueness_vertices: int = 6
    rejections: int = 1000
    twin_graphs: int = 1000
    twin_max_vertices: int = 8
    scaling_exponents: tuple[int, ...] = (15, 16, 17, 18, 19, 20)
    scaling_runs: int = 5
    round_trip_budget: float = 60.0


FULL = Scale()
DESK = Scale(
    random_roots=300,
    random_max_vertices=30,
    random_max_edges=80,
    enum_vertices=4,
    enum_edges=5,
    uniqueness_vertices=5,
    rejections=100,
    twin_graphs=200,
    scaling_exponents=(13, 14, 15, 16),
    scaling_runs=3,
)

SCALING_FACTOR = 2.5
SCALING_BUDGET = 10.0


def claw() -> SimpleGraph:
    return SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


def diamond() -> SimpleGraph:
    return SimpleGraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def triangle() -> SimpleGraph:
    return SimpleGraph.from_edges(3, [(0, 1), (0, 2), (1, 2)])


def _show(g: MultiGraph) -> str:
    """Compact form: vertex count and each vertex pair with its multiplicity."""
    parts = []
    for (u, v), edges in sorted(parallel_classes(g)):
        parts.append(f"{u}-{v}" + (f"x{len(edges)}" if len(edges) > 1 else ""))
    pairs = " ".join(parts)
    return f"{g.vertex_count} vertices [{pairs}]"


def _iso(a: MultiGraph, b: MultiGraph) -> bool:
    return multigraph_isomorphic(a, b) is not None


def enumerated_roots(scale: Scale) -> Iterator[MultiGraph]:
    """Connected multigraphs at enumeration scale, one per isomorphism class."""
    for g in enumerate_multigraphs(scale.enum_vertices, scale.enum_edges, connected_only=True, min_vertices=2):
        if g.edge_count:
            yield g


def random_roots(scale: Scale) -> Iterator[MultiGraph]:
    """Seeded random connected multigraphs; seed ``s`` also fixes the size."""
    for seed in range(scale.random_roots):
        rng = random.Random(seed)
        n = rng.randint(2, scale.random_max_vertices)
        m = rng.randint(n - 1, scale.random_max_edges)
        yield random_multigraph(n, m, seed, connected=True)


def four_vertex_sides(delta: MultiGraph) -> list[list[int]]:
    """Edges of a 4-vertex multigraph grouped by the perfect matching they lie in."""
    matchings = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))
    return [[e for e, p in enumerate(delta.edges) if p in m] for m in matchings]


def _l1_failure(delta: MultiGraph, gamma: SimpleGraph) -> str | None:
    try:
        r = reconstruct_root(gamma, LineMode.L1)
    except NotLineGraph as exc:
        return f"rejected ({exc})"
    if not verify(gamma, r):
        return "verify failed"
    if delta.vertex_count != 4:
        return None if _iso(r.root, delta) else "root not isomorphic to the original"
    # Each matching of the 4-vertex original collapses onto one side of the triangle.
    if r.root.vertex_count != 3:
        return f"4-vertex original gave a {r.root.vertex_count}-vertex root"
    sides = []
    for group in four_vertex_sides(delta):
        pairs = {r.root.edges[r.vertex_to_edge[e]] for e in group}
        if len(pairs) > 1:
            return "a matching is split across sides"
        sides.extend(pairs)
    if len(set(sides)) != len(sides):
        return "two matchings share a side"
    return None


def _run(number: int, title: str, cases: Callable[[], Iterator[tuple[str, str | None]]],
         budget: float | None = None) -> CriterionResult:
    start = time.perf_counter()
    total = 0
    failures: list[str] = []
    for label, failure in cases():
        total += 1
        if failure is not None:
            failures.append(f"{label}: {failure}")
    elapsed = time.perf_counter() - start
    passed = not failures and (budget is None or elapsed < budget)
    detail = f"{total - len(failures)}/{total} ok in {elapsed:.1f}s"
    if budget is not None:
        detail += f" (budget {budget:.0f}s)"
    if failures:
        detail += f"; first failure {failures[0]}"
    return CriterionResult(number, title, passed, detail)


def check_l1_round_trip(scale: Scale = FULL) -> CriterionResult:
    def cases():
        for delta in enumerated_roots(scale):
            gamma = l1_line_graph(delta)
            if is_connected(gamma):
                yield "enumerated " + _show(delta), _l1_failure(delta, gamma)
        for i, delta in enumerate(random_roots(scale)):
            gamma = l1_line_graph(delta)
            # Roots whose 1-line graph is disconnected are outside the domain.
            if is_connected(gamma):
                yield f"random seed {i}", _l1_failure(delta, gamma)

    return _run(1, "L1 round trip", cases, scale.round_trip_budget)


def _geq1_failure(delta: MultiGraph, against_rewrite: bool) -> str | None:
    gamma = geq1_line_graph(delta)
    try:
        r = reconstruct_root(gamma, LineMode.GEQ1)
    except NotLineGraph as exc:
        return f"rejected ({exc})"
    if not verify(gamma, r):
        return "verify failed"
    rewritten = delta0_rewrite(delta)[0]
    target = delta if is_delta0_free(delta) else rewritten
    if not _iso(r.root, target):
        return f"root {_show(r.root)} not isomorphic to {_show(target)}"
    if against_rewrite and not _iso(delta0_collapse(delta), rewritten):
        return "collapse disagrees with the rewriting oracle"
    return None


def check_geq1_round_trip(scale: Scale = FULL) -> CriterionResult:
    def cases():
        for delta in enumerated_roots(scale):
            yield "enumerated " + _show(delta), _geq1_failure(delta, against_rewrite=True)
        for i, delta in enumerate(random_roots(scale)):
            yield f"random seed {i}", _geq1_failure(delta, against_rewrite=False)

    return _run(2, "GEQ1 round trip", cases)


def _canonical(mode: LineMode, g: MultiGraph) -> bool:
    return g.vertex_count != 4 if mode is LineMode.L1 else is_delta0_free(g)


def check_uniqueness(scale: Scale = FULL) -> CriterionResult:
    def cases():
        for n in range(1, scale.uniqueness_vertices + 1):
            for gamma in enumerate_simple_graphs(n):
                for mode in LineMode:
                    label = f"{mode.value} graph {n} vertices {gamma.edge_list()}"
                    roots = brute_force_roots(gamma, mode)
                    try:
                        r = reconstruct_root(gamma, mode)
                    except NotLineGraph:
                        r = None
                    if not roots:
                        yield label, None if r is None else "accepted a graph with no root"
                        continue
                    canonical = [g for g in roots if _canonical(mode, g)]
                    if len(canonical) != 1:
                        yield label, f"{len(canonical)} canonical classes"
                    elif r is None:
                        yield label, "rejected a line graph"
                    else:
                        yield label, None if _iso(canonical[0], r.root) else "root differs from the oracle"

    return _run(3, "uniqueness at oracle scale", cases)


def check_whitney() -> CriterionResult:
    k3 = triangle()
    roots = brute_force_roots(k3, LineMode.L1, 4)
    star = MultiGraph(4, ((0, 1), (0, 2), (0, 3)))
    tri = MultiGraph(3, ((0, 1), (0, 2), (1, 2)))
    found = len(roots) == 2 and any(_iso(g, star) for g in roots) and any(_iso(g, tri) for g in roots)
    root = reconstruct_root(k3, LineMode.L1).root
    chosen = _iso(root, tri)
    return CriterionResult(
        4, "Whitney exception", found and chosen,
        f"{len(roots)} root classes of K3 (expected K3 and K1,3); reconstruction picks {_show(root)}",
    )


def _rejects(gamma: SimpleGraph, mode: LineMode) -> bool:
    try:
        reconstruct_root(gamma, mode)
    except NotLineGraph:
        return True
    return False


def check_rejection(scale: Scale = FULL) -> CriterionResult:
    notes = []
    ok = _rejects(claw(), LineMode.GEQ1) and not _rejects(claw(), LineMode.L1)
    notes.append("claw " + ("rejected in ge1, accepted in l1" if ok else "misclassified"))
    for mode in LineMode:
        rng = random.Random(f"reject-{mode.value}")
        found = disagreements = tries = 0
        while found < scale.rejections and tries < 50 * scale.rejections:
            tries += 1
            n = rng.randint(4, 7)
            gamma = random_simple_graph(n, rng.uniform(0.2, 0.9), rng, connected=True)
            is_line = bool(brute_force_roots(gamma, mode))
            found += not is_line
            disagreements += is_line == _rejects(gamma, mode)
        ok = ok and found == scale.rejections and disagreements == 0
        notes.append(f"{mode.value}: {found} certified non-line graphs in {tries} draws, {disagreements} disagreements")
    return CriterionResult(5, "rejection soundness", ok, "; ".join(notes))


def _pairwise_classes(g: SimpleGraph, kind: TwinKind) -> set[frozenset[int]]:
    def hood(v):
        s = set(g.neighbors(v))
        return s | {v} if kind is TwinKind.TRUE else s

    n = g.vertex_count
    same = {v: {v} for v in range(n)}
    for u, v in combinations(range(n), 2):
        if hood(u) == hood(v):
            same[u].add(v)
            same[v].add(u)
    return {frozenset(c) for c in same.values()}


def check_twins(scale: Scale = FULL) -> CriterionResult:
    def cases():
        rng = random.Random("twins")
        for i in range(scale.twin_graphs):
            g = random_simple_graph(rng.randint(1, scale.twin_max_vertices), rng.random(), rng)
            for kind in TwinKind:
                p = twin_partition(g, kind)
                failure = None
                if {frozenset(c) for c in p.classes} != _pairwise_classes(g, kind):
                    failure = "partition differs from the pairwise oracle"
                elif any(p.classes[p.class_of[v]][0] > v or v not in p.classes[p.class_of[v]]
                         for v in range(g.vertex_count)):
                    failure = "class_of inconsistent with classes"
                elif not twin_partition(quotient(g, p).graph, kind).is_trivial():
                    failure = "quotient has twins"
                yield f"graph {i} {kind.value}", failure

    return _run(6, "twin partitions", cases)


def scaling_instances(exponents: tuple[int, ...], mode: LineMode) -> list[SimpleGraph]:
    """Line graphs of sparse random multigraphs with about ``2**k`` edges each."""
    out = []
    for k in exponents:
        n = max(2, 2 ** k // 32)
        out.append(line_graph(random_multigraph(n, 4 * n, k, connected=True), mode))
    return out


def measure_scaling(graphs: list[SimpleGraph], mode: LineMode, runs: int) -> list[float]:
    """Median wall time per graph; the runs are interleaved across sizes so
    that load bursts on the machine hit every size alike."""
    for g in graphs:
        reconstruct_root(g, mode)
    times: list[list[float]] = [[] for _ in graphs]
    for _ in range(runs):
        for i, g in enumerate(graphs):
            gc.collect()
            start = time.perf_counter()
            reconstruct_root(g, mode)
            times[i].append(time.perf_counter() - start)
    return [statistics.median(t) for t in times]


def check_scaling(scale: Scale = FULL) -> CriterionResult:
    ok = True
    notes = []
    for mode in LineMode:
        graphs = scaling_instances(scale.scaling_exponents, mode)
        medians = measure_scaling(graphs, mode, scale.scaling_runs)
        ratios = [b / a for a, b in zip(medians, medians[1:])]
        ok = ok and max(ratios) <= SCALING_FACTOR and medians[-1] < SCALING_BUDGET
        notes.append(
            f"{mode.value}: |E| {graphs[0].edge_count}..{graphs[-1].edge_count}, "
            f"ratios {' '.join(f'{x:.2f}' for x in ratios)}, largest {medians[-1]:.2f}s"
        )
    return CriterionResult(
        7, "linear scaling", ok,
        f"limit {SCALING_FACTOR} per doubling, {SCALING_BUDGET:.0f}s at the top; " + "; ".join(notes),
    )


def check_glg() -> CriterionResult:
    d = is_generalized_line_graph(diamond())
    paw = MultiGraph(4, ((0, 1), (0, 2), (1, 2), (2, 3)))
    diamond_ok = (
        d is not None
        and d.root.vertex_count == 4
        and _iso(d.root, paw)
        and verify(diamond(), d)
        and reconstruct_root(diamond(), LineMode.L1).root.vertex_count == 3
    )
    claw_ok = is_generalized_line_graph(claw()) is None
    detail = f"diamond -> {_show(d.root) if d else 'none'}; claw -> {'not GLG' if claw_ok else 'GLG'}"
    return CriterionResult(8, "generalized line graph corner case", diamond_ok and claw_ok, detail)


CHECKS: dict[int, Callable[[Scale], CriterionResult]] = {
    1: check_l1_round_trip,
    2: check_geq1_round_trip,
    3: check_uniqueness,
    4: lambda scale: check_whitney(),
    5: check_rejection,
    6: check_twins,
    7: check_scaling,
    8: lambda scale: check_glg(),
}


def run_all(scale: Scale = FULL, only: list[int] | None = None) -> list[CriterionResult]:
    return [CHECKS[k](scale) for k in sorted(CHECKS) if only is None or k in only]
