"""Exact expectation and variance of the number of edge crossings of a graph
whose vertices are placed uniformly at random on a line, with brute-force
oracles, closed forms for special families, empirical estimators and a
z-score significance test."""

__version__ = "0.1.0"

from .arrangement import (
    LinearArrangement,
    all_arrangements,
    crossings,
    edge_length,
    format_arrangement,
    identity_arrangement,
    max_crossings_of_length,
    max_edges_of_length,
    parse_arrangement,
    random_arrangement,
)
from .closed_forms import (
    CLOSED_FAMILIES,
    FamilySpec,
    closed_expectation,
    closed_freq,
    closed_size_q,
    closed_variance,
)
from .estimator import (
    EstimateReport,
    ScanRow,
    exhaustive_moments,
    monte_carlo_moments,
    scan_family,
)
from .graphs import (
    FAMILIES,
    BudgetError,
    DegreeStats,
    Graph,
    GraphFormatError,
    QZeroWitness,
    degree_stats,
    disjoint_union,
    erdos_renyi,
    format_edge_list,
    from_edge_list,
    from_graph6,
    from_pruefer,
    gen_family,
    is_q_zero,
    parse_edge_list,
    q_edge,
    size_q,
    to_graph6,
)
from .moments import (
    ALPHA_RLA,
    DELTA_RLA,
    GAMMA_RLA,
    RLA,
    LayoutConstants,
    RlaConstants,
    chebyshev_pbound,
    expectation_rla,
    format_rational,
    variance_from_freq,
    variance_layout,
    variance_rla,
    z_score,
)
from .product_types import (
    GRAPHETTE_MULTIPLIERS,
    GRAPHETTE_SHAPES,
    PRODUCT_TYPES,
    TYPE_VERTEX_COUNT,
    FreqVector,
    classify,
    count_graphette,
    freq_brute,
    freq_fast,
)
from .validation import (
    ValidationReport,
    check_graph,
    validate_er,
    validate_families,
    validate_graph6_corpus,
    validate_trees,
)
