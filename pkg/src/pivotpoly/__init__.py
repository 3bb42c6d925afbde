"""Exact pivot algebra over GF(2) and the rationals.

Principal pivot transform on label-indexed matrices, the nullity identities
it satisfies, partition sequences and their twists, interlace polynomials by
enumeration and by recursion, and a closed-walk tracer on double occurrence
strings that cross-checks all of it.
"""

from .matrix import (
    GF2,
    RATIONAL,
    Matrix,
    PivotUndefinedError,
    SingularMatrixError,
    SubsetMask,
    delete_label,
    determinant,
    identity_outside,
    inverse,
    mat_mul,
    mat_vec,
    nullity,
    principal_submatrix,
    rank,
    schur_complement,
    transpose,
)
from .pivot import (
    nullity_after_pivot,
    pivot,
    pivot_composition,
    tucker_determinant_check,
    verify_partial_inverse,
)
from .setsystems import (
    PartitionSequence,
    SetSystem,
    norm,
    partition_sequence_of,
    restrict,
    set_system_of,
    twist,
)
from .graphs import (
    OrbitOverflowError,
    PivotOrbit,
    edge_complement,
    edges_of,
    elementary_decomposition,
    elementary_pivots,
    graph_from_edges,
    graph_from_set_system,
    local_complement,
    pivot_orbit,
)
from .interlace import (
    Poly,
    interlace_from_nullity,
    interlace_polynomial,
    interlace_recursive,
    nullity_from_interlace,
    nullity_polynomial,
    verify_recursion,
)
from .circuits import (
    TwoInTwoOutDigraph,
    WalkPartition,
    cohn_lempel_check,
    count_euler_circuits,
    cyclic_equal,
    digraph_of,
    overlap_graph,
    parse_dos,
    trace_partition,
    walk_distribution,
    walk_labels,
)

__version__ = "0.1.0"

__all__ = [
    "GF2",
    "RATIONAL",
    "Matrix",
    "SubsetMask",
    "SingularMatrixError",
    "PivotUndefinedError",
    "principal_submatrix",
    "delete_label",
    "transpose",
    "rank",
    "nullity",
    "determinant",
    "inverse",
    "identity_outside",
    "schur_complement",
    "mat_mul",
    "mat_vec",
    "pivot",
    "verify_partial_inverse",
    "nullity_after_pivot",
    "tucker_determinant_check",
    "pivot_composition",
    "SetSystem",
    "PartitionSequence",
    "set_system_of",
    "partition_sequence_of",
    "twist",
    "norm",
    "restrict",
    "graph_from_edges",
    "edges_of",
    "local_complement",
    "edge_complement",
    "elementary_pivots",
    "elementary_decomposition",
    "pivot_orbit",
    "PivotOrbit",
    "OrbitOverflowError",
    "graph_from_set_system",
    "Poly",
    "nullity_polynomial",
    "interlace_polynomial",
    "interlace_from_nullity",
    "nullity_from_interlace",
    "interlace_recursive",
    "verify_recursion",
    "TwoInTwoOutDigraph",
    "WalkPartition",
    "parse_dos",
    "overlap_graph",
    "digraph_of",
    "trace_partition",
    "walk_labels",
    "cohn_lempel_check",
    "walk_distribution",
    "count_euler_circuits",
    "cyclic_equal",
    "__version__",
]
