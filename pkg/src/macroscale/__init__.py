"""Effective information and causal emergence for weighted directed networks.

The package measures the effective information (EI) of a network's
random-walk structure, builds stationary-weighted macro-nodes, and searches
for the coarse-graining that maximizes EI with three interchangeable
algorithms: greedy Markov-blanket merging, spectral embedding with OPTICS
clustering, and gradient ascent on a softmax-relaxed assignment. A sweep
harness reproduces the preferential-attachment experiments; see the
``macroscale`` CLI.
"""

from .coarse import (
    MacroResult,
    Partition,
    accuracy,
    causal_emergence,
    coarse_grain,
    read_partition,
    write_partition,
)
from .ei import EIBreakdown, effective_information, shannon_entropy
from .generators import (
    PAConfig,
    complete,
    cycle,
    erdos_renyi,
    preferential_attachment,
    star,
)
from .gradient import GradConfig, SoftAssignment, gradient_search, soft_ei, soft_ei_gradient
from .greedy import GreedyConfig, greedy_search
from .harness import (
    ExperimentConfig,
    RunRecord,
    execute_sweep,
    parse_config_file,
    read_runs_csv,
    run_sweep,
    write_runs_csv,
    write_summary_csv,
)
from .metrics import (
    MetricsReport,
    WitnessSearchError,
    assortativity,
    betweenness,
    communicability_entropy,
    degenerate_witness,
    degree_stats,
    eigenvector_centrality,
    entropy_rate,
    global_efficiency,
    kernel_dimension,
    metrics_report,
)
from .network import (
    Network,
    StationaryDistribution,
    markov_blanket,
    normalize,
    read_edge_list,
    stationary,
    walk_step,
    write_edge_list,
)
from .spectral import (
    OpticsConfig,
    OpticsResult,
    SpectralEmbedding,
    dbscan_cut,
    distances,
    embed,
    optics_order,
    spectral_search,
)

__version__ = "0.1.0"

__all__ = [
    "EIBreakdown",
    "ExperimentConfig",
    "GradConfig",
    "GreedyConfig",
    "MacroResult",
    "MetricsReport",
    "Network",
    "OpticsConfig",
    "OpticsResult",
    "PAConfig",
    "Partition",
    "RunRecord",
    "SoftAssignment",
    "SpectralEmbedding",
    "StationaryDistribution",
    "WitnessSearchError",
    "accuracy",
    "assortativity",
    "betweenness",
    "causal_emergence",
    "coarse_grain",
    "communicability_entropy",
    "complete",
    "cycle",
    "dbscan_cut",
    "degenerate_witness",
    "degree_stats",
    "distances",
    "effective_information",
    "eigenvector_centrality",
    "embed",
    "entropy_rate",
    "erdos_renyi",
    "execute_sweep",
    "global_efficiency",
    "gradient_search",
    "greedy_search",
    "kernel_dimension",
    "markov_blanket",
    "metrics_report",
    "normalize",
    "optics_order",
    "parse_config_file",
    "preferential_attachment",
    "read_edge_list",
    "read_runs_csv",
    "read_partition",
    "run_sweep",
    "shannon_entropy",
    "soft_ei",
    "soft_ei_gradient",
    "spectral_search",
    "star",
    "stationary",
    "walk_step",
    "write_edge_list",
    "write_partition",
    "write_runs_csv",
    "write_summary_csv",
]
