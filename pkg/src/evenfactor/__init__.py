"""Verification lab for size and spectral-radius conditions for even factors."""

from .factor import (
    EXISTS,
    NOT_EXISTS,
    UNKNOWN,
    ConditionReport,
    EvenFactorResult,
    check_yan_kano_condition,
    cycle_space_basis,
    has_even_factor,
    has_even_factor_naive,
    verify_even_factor,
)
from .graph6 import (
    Graph6Error,
    GraphParseError,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .graphs import (
    FamilySpec,
    Graph,
    GraphStats,
    build_family,
    complete,
    cycle,
    disjoint_union,
    extremal,
    graph_stats,
    join,
    merged_family,
    odd_components_minus,
    path,
)
from .harness import (
    SweepReport,
    lemma_merge_sweep,
    soundness_sweep,
    subgraph_monotonicity_sweep,
    tightness_report,
)
from .identities import (
    IdentityCheck,
    check_edge_diff_case1,
    check_edge_diff_case3,
    check_phi_diff_case1,
    check_phi_diff_case3,
    check_sign_claims,
    run_identity_grid,
)
from .rng import SplitMix64, random_connected_graph, random_graph_with_edges
from .spectral import (
    CubicPoly,
    PowerIterationError,
    QuotientMatrix3,
    RootFindingError,
    SpectralResult,
    char_poly,
    largest_real_root,
    quotient_extremal,
    quotient_merged_core,
    quotient_small_cliques,
    spectral_radius,
)
from .thresholds import (
    Verdict,
    applicability,
    edge_threshold,
    recognize_extremal,
    spectral_threshold,
    verdict,
)

__version__ = "0.1.0"
