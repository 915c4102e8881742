"""Recognition of 1-line and >=1-line graphs of multigraphs with root reconstruction."""

import sys

from .errors import (
    BudgetExceeded,
    CannotLift,
    ConstraintUnsatisfiable,
    GraphError,
    InvalidInput,
    MalformedInput,
    NotALineGraph,
    NotLineGraph,
)
from .graphs import (
    MultiGraph,
    MultiGraphIsomorphism,
    ParallelClass,
    SimpleGraph,
    components,
    invariant_key,
    is_connected,
    multigraph_isomorphic,
    parallel_classes,
    simple_isomorphic,
    underlying_simple,
)
from .linegraph import LineMode, geq1_line_graph, l1_line_graph, line_graph
from .reconstruct import (
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
from .textio import emit_root, format_multigraph, format_simple_graph, parse_multigraph, parse_root, parse_simple_graph
from .twins import QuotientGraph, TwinKind, TwinPartition, false_twin_partition, quotient, true_twin_partition, twin_partition
from .whitney import K3Policy, KrauszCover, SimpleRootResult, krausz_cover, simple_line_graph_root

__all__ = [name for name, value in dict(globals()).items()
           if not name.startswith("_") and not isinstance(value, type(sys))]
