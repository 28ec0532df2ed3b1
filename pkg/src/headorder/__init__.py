"""Head-placement statistics for linearized single-head phrases.

Exact null models of the dependency-distance sum D under random shuffling,
right-tail binomial tests for head-first-or-last placement (with the
four-way integer transformation for fractional frequencies), quantile
confidence intervals, the g <-> <D> bridge with the 3-sigma separation
statistic, and the swap-distance permutation ring of constituent orders.
"""

from .dataio import (
    DatasetBundle,
    TableParseError,
    TableSchema,
    builtin_bundle,
    builtin_dryer_table,
    builtin_sov_aggregates,
    export_plot_data,
    load_frequency_table,
    reports_to_csv,
    reports_to_text,
    serialize_frequency_table,
)
from .nullmodel import (
    DEFAULT_ENUMERATION_CAP,
    DiscreteDistribution,
    EnumerationCapError,
    NullMoments,
    ThreeSigmaAssumptions,
    check_three_sigma_assumptions,
    enumerate_D_distribution,
    expected_D,
    is_unimodal,
    null_moments,
    sigma_mean_D,
    variance_D,
    variance_D_star,
)
from .rings import PermutationRing, adjacent, build_ring, ring_layout, swap_distance
from .stats import (
    HeadPlacementReport,
    OrderFrequencyTable,
    analyze,
    anti_locality_counts,
    binomial_pmf,
    binomial_proportion_ci,
    binomial_quantile,
    head_end_frequency,
    mean_D_from_g,
    order_distance_sum,
    p_head_at_ends,
    quad_binomial_test,
    right_binomial_test,
    sigma_separation_k,
    three_sigma_verdict,
    total_frequency,
)
from .trees import (
    DependencyDistanceSummary,
    FreeTree,
    LinearArrangement,
    d_max_single_head,
    d_min_single_head,
    degree_second_moment,
    parse_tree,
    path,
    single_head_D,
    single_head_summary,
    star,
    sum_dependency_distances,
    tree_to_text,
)

__version__ = "0.1.0"

__all__ = [
    "DatasetBundle",
    "DependencyDistanceSummary",
    "DiscreteDistribution",
    "DEFAULT_ENUMERATION_CAP",
    "EnumerationCapError",
    "FreeTree",
    "HeadPlacementReport",
    "LinearArrangement",
    "NullMoments",
    "OrderFrequencyTable",
    "PermutationRing",
    "TableParseError",
    "TableSchema",
    "ThreeSigmaAssumptions",
    "adjacent",
    "analyze",
    "anti_locality_counts",
    "binomial_pmf",
    "binomial_proportion_ci",
    "binomial_quantile",
    "build_ring",
    "builtin_bundle",
    "builtin_dryer_table",
    "builtin_sov_aggregates",
    "check_three_sigma_assumptions",
    "d_max_single_head",
    "d_min_single_head",
    "degree_second_moment",
    "enumerate_D_distribution",
    "expected_D",
    "export_plot_data",
    "head_end_frequency",
    "is_unimodal",
    "load_frequency_table",
    "mean_D_from_g",
    "null_moments",
    "order_distance_sum",
    "p_head_at_ends",
    "parse_tree",
    "path",
    "quad_binomial_test",
    "reports_to_csv",
    "reports_to_text",
    "right_binomial_test",
    "ring_layout",
    "serialize_frequency_table",
    "sigma_mean_D",
    "sigma_separation_k",
    "single_head_D",
    "single_head_summary",
    "star",
    "sum_dependency_distances",
    "swap_distance",
    "three_sigma_verdict",
    "total_frequency",
    "tree_to_text",
    "variance_D",
    "variance_D_star",
]
