"""Graph pebbling toolkit.

Exact solvers for pebbling solvability, pebbling numbers, and Class 0
status; extremal minimum-degree constructions with certified unsolvable
configurations; greedy star partitions with a sufficient-solvability test;
and Monte Carlo estimation of solvability thresholds under the uniform
random-configuration model.
"""

from .extremal import (
    LabeledGraph,
    bipartite_extremal,
    bipartite_extremal_config,
    general_extremal,
    general_extremal_config,
    read_roles,
    write_roles,
)
from .graphs import (
    Graph,
    RetryExhaustedError,
    complete,
    complete_bipartite,
    cycle,
    hypercube,
    path,
    petersen,
    random_connected_min_degree,
    read_edge_list,
    write_edge_list,
)
from .pebbling import (
    BudgetExceeded,
    Configuration,
    Move,
    apply_move,
    brute_force_r_solvable,
    find_unsolvable,
    format_witness,
    greedy_tree_solvable,
    is_class0,
    is_r_solvable,
    is_solvable,
    parse_witness,
    pebbling_number,
    read_configuration,
    replay_witness,
    write_configuration,
)
from .stars import (
    Part,
    StarPartition,
    build_star_partition,
    star_sufficient_solvable,
    verify_star_partition,
)
from .thresholds import (
    CurveRow,
    OccupancyStats,
    ThresholdCurve,
    TrialPlan,
    estimate_solvability_probability,
    exact_count_prob,
    exact_double_prob,
    exact_pair_double_prob,
    multiset_count,
    occupancy_stats,
    sample_uniform_config,
    threshold_sweep,
    trial_rng,
    wilson_interval,
)

__version__ = "0.1.0"
