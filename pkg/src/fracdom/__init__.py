"""Fractional domatic number: classification, certificates and an exact LP oracle."""

from .config import (
    Configuration,
    ConfigurationError,
    combine,
    double_plus_set,
    is_nice,
    make_nice,
    normalize_to_odd,
    split_by_pair,
    value,
    verify,
)
from .decomposition import (
    EarDecomposition,
    StructureReport,
    cut_vertices,
    dumbbell_decomposition,
    find_cycle_avoiding_length_4,
    is_two_connected,
    maximal_binary_path_through,
    open_ear_decomposition,
)
from .domination import (
    disjoint_dominating_pair,
    enumerate_minimal_dominating_sets,
    greedy_maximal_independent_set,
    is_dominating,
    is_minimal_dominating,
)
from .graph import (
    Graph,
    connected_components,
    from_edge_list,
    induced_subgraph,
    members,
    min_degree,
    recognize_cycle,
    recognize_k2p,
    to_mask,
)
from .oracle import FdValue, conjecture_scan, exact_fd, fd_of_disjoint_union_check
from .synthesis import (
    Classification,
    classify,
    cycle_configuration,
    dumbbell_c4c4,
    dumbbell_c4h,
    dumbbell_h1h2,
    ear_extend,
    k2p_configuration,
    two_connected_synthesis,
)

__version__ = "0.1.0"
