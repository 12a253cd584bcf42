"""Transfer graphs on integer partitions and their clique complexes.

The package builds the graph whose vertices are the partitions of n, with
edges given by admissible single-box transfers, then studies the clique
complex of that graph: triangle and clique classification, canonical
covers and their nerves, anchor intersection posets, exact integer
homology, and peak reduction of edge loops.  A verification layer checks
every structural claim against independent recomputations.
"""

from .cliques import (
    CliqueClass,
    CoverMember,
    FVector,
    NotACliqueError,
    TheoremViolationError,
    TriangleClass,
    canonical_cover,
    classify_clique,
    classify_triangle,
    enumerate_simplices,
    euler_characteristic,
    format_facet_lines,
    full_star_simplex,
    full_top_simplex,
    fvector_by_fiber_counting,
    maximal_simplices,
    read_facets,
    star_fiber,
    top_fiber,
    write_facets,
)
from .graph import (
    PartitionGraph,
    UnknownVertexError,
    adjacency_by_conjugate,
    are_adjacent,
    build_graph,
    edge_decompositions,
    format_dimacs,
    format_edge_list,
    format_legend,
    neighbors,
    write_dimacs,
    write_edge_list,
    write_legend,
)
from .homology import (
    ChainComplex,
    EmptyComplexError,
    HomologyReport,
    build_chain_complex,
    reduced_homology,
    smith_normal_form,
)
from .loops import (
    EdgeLoop,
    InvalidLoopError,
    LoopComplexity,
    ReductionTrace,
    complexity,
    format_loop,
    normalize_loop,
    parse_loop,
    peak_reduce_step,
    random_closed_walk,
    reduce_loop,
)
from .nerve import (
    AnchorSimplex,
    IntersectionPoset,
    NerveComplex,
    OrderComplex,
    anchor,
    anchor_intersection,
    build_nerve,
    build_poset,
    closure,
    max_chain_length,
    nerve_fvector,
    order_complex,
    poset_json_dict,
)
from .oracles import partition_count
from .partitions import (
    Corner,
    InadmissibleTransferError,
    InvalidCornerError,
    InvalidPartitionError,
    Partition,
    addable_corners,
    admissible_transfers,
    apply_transfer,
    as_partition,
    conjugate,
    enumerate_partitions,
    format_partition,
    height,
    is_admissible,
    parse_partition,
    removable_corners,
)
from .verification import (
    BUDGETS,
    SUITE_ORDER,
    VerificationOutcome,
    run_verification,
    verify_single_n,
)

__version__ = "0.1.0"

__all__ = [
    "AnchorSimplex",
    "BUDGETS",
    "ChainComplex",
    "CliqueClass",
    "Corner",
    "CoverMember",
    "EdgeLoop",
    "EmptyComplexError",
    "FVector",
    "HomologyReport",
    "InadmissibleTransferError",
    "IntersectionPoset",
    "InvalidCornerError",
    "InvalidLoopError",
    "InvalidPartitionError",
    "LoopComplexity",
    "NerveComplex",
    "NotACliqueError",
    "OrderComplex",
    "Partition",
    "PartitionGraph",
    "ReductionTrace",
    "SUITE_ORDER",
    "TheoremViolationError",
    "TriangleClass",
    "UnknownVertexError",
    "VerificationOutcome",
    "addable_corners",
    "adjacency_by_conjugate",
    "admissible_transfers",
    "anchor",
    "anchor_intersection",
    "apply_transfer",
    "are_adjacent",
    "as_partition",
    "build_chain_complex",
    "build_graph",
    "build_nerve",
    "build_poset",
    "canonical_cover",
    "classify_clique",
    "classify_triangle",
    "closure",
    "complexity",
    "conjugate",
    "edge_decompositions",
    "enumerate_partitions",
    "enumerate_simplices",
    "euler_characteristic",
    "format_dimacs",
    "format_edge_list",
    "format_facet_lines",
    "format_legend",
    "format_loop",
    "format_partition",
    "full_star_simplex",
    "full_top_simplex",
    "fvector_by_fiber_counting",
    "height",
    "is_admissible",
    "max_chain_length",
    "maximal_simplices",
    "neighbors",
    "nerve_fvector",
    "normalize_loop",
    "order_complex",
    "parse_loop",
    "parse_partition",
    "partition_count",
    "peak_reduce_step",
    "poset_json_dict",
    "random_closed_walk",
    "read_facets",
    "reduce_loop",
    "reduced_homology",
    "removable_corners",
    "run_verification",
    "smith_normal_form",
    "star_fiber",
    "top_fiber",
    "verify_single_n",
    "write_dimacs",
    "write_edge_list",
    "write_facets",
    "write_legend",
]
