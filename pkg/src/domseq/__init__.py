"""Grundy double domination sequences: exact exponential oracle,
linear-style constructive solvers for trees, threshold graphs, cographs
and P4-tidy graphs, verifiers, bounds, and family generators."""

from .bounds import BoundReport, SmallGddn, bound_report, classify_small_gddn, s1_majority_witness
from .classgen import FAMILIES, GenSpec, build_spider, gen
from .decomposition import (
    DecompTree,
    JoinNode,
    Leaf,
    SpecialNode,
    SpiderNode,
    SpiderPartition,
    UnionNode,
    decompose,
    match_special,
    recognize_quasi_spider,
    recognize_spider,
    tree_to_json,
)
from .graph import (
    DegreeProfile,
    Graph,
    GraphError,
    VertexFlags,
    classify_vertex,
    complement,
    components,
    degree_profile,
    disjoint_union,
    find_twins,
    format_edge_list,
    induced_subgraph,
    is_tree,
    join,
    parse_edge_list,
)
from .oracle import (
    DEFAULT_LIMIT,
    IsolatedVertexError,
    OracleLimitError,
    OracleResult,
    oracle_double_domination,
    oracle_gddn,
    oracle_grundy_domination,
    oracle_mdns,
)
from .reductions import (
    LiftResult,
    ReductionError,
    TwinInterval,
    blowup_gf,
    deletion_delta,
    lift_isolated,
    lift_pendant,
    lift_universal,
    touches_twin_pair,
    true_twin_plus_one_applies,
    twin_interval,
)
from .sequence import (
    Certificate,
    SequenceError,
    StepFootprint,
    concat,
    delete_vertices,
    footprint,
    move_after,
    p_set,
    split_levels,
)
from .solvers import (
    SolveResult,
    SolverError,
    UnsupportedGraphError,
    mdns_join,
    mdns_quasi_spider,
    mdns_spider,
    mdns_union,
    solve_auto,
    solve_cograph,
    solve_p4tidy,
    solve_threshold,
    solve_tree,
)

__version__ = "0.1.0"
