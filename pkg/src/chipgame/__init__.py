"""chipgame: chip-firing (dollar game) analysis on finite multigraphs.

Build a graph, put chips on it, and ask the classic questions: is the game
winnable, what is the reduced form, what is the divisor's rank, and what is
the graph's gonality.
"""

from .errors import ChipGameError
from .graph import (
    Multigraph,
    LaplacianMatrix,
    GraphStats,
    build_graph,
    graph_stats,
    laplacian,
    bfs_distances,
)
from .families import (
    tetrahedron,
    cube,
    octahedron,
    dodecahedron,
    icosahedron,
    complete,
    chain_of_cycles,
    generate_family,
)
from .divisor import (
    Divisor,
    FiringScript,
    Move,
    make_divisor,
    divisor_metrics,
    apply_move,
    apply_script,
    principal_divisor,
    canonical_divisor,
    linear_equivalence,
    complete_linear_system,
)
from .configuration import (
    Configuration,
    make_config,
    outdeg_S,
    legal_set_fire,
    is_superstable,
    enumerate_superstables,
)
from .orientation import (
    Orientation,
    OrientationAnalysis,
    make_orientation,
    orientation_analysis,
    divisor_of_orientation,
    reverse_orientation,
    enumerate_acyclic_unique_source,
)
from .dhar import (
    DharOutcome,
    EwdResult,
    EwdStep,
    dhar_burning,
    concentrate_debt,
    q_reduce,
    is_q_reduced,
    ewd,
    is_winnable,
    default_q,
)
from .rank import (
    RankResult,
    greedy_play,
    rank,
    riemann_roch_check,
    clifford_check,
    enumerate_effective,
)
from .gonality import GonalityResult, gonality

__version__ = "0.1.0"

__all__ = [
    "ChipGameError",
    "Multigraph",
    "LaplacianMatrix",
    "GraphStats",
    "build_graph",
    "graph_stats",
    "laplacian",
    "bfs_distances",
    "tetrahedron",
    "cube",
    "octahedron",
    "dodecahedron",
    "icosahedron",
    "complete",
    "chain_of_cycles",
    "generate_family",
    "Divisor",
    "FiringScript",
    "Move",
    "make_divisor",
    "divisor_metrics",
    "apply_move",
    "apply_script",
    "principal_divisor",
    "canonical_divisor",
    "linear_equivalence",
    "complete_linear_system",
    "Configuration",
    "make_config",
    "outdeg_S",
    "legal_set_fire",
    "is_superstable",
    "enumerate_superstables",
    "Orientation",
    "OrientationAnalysis",
    "make_orientation",
    "orientation_analysis",
    "divisor_of_orientation",
    "reverse_orientation",
    "enumerate_acyclic_unique_source",
    "DharOutcome",
    "EwdResult",
    "EwdStep",
    "dhar_burning",
    "concentrate_debt",
    "q_reduce",
    "is_q_reduced",
    "ewd",
    "is_winnable",
    "default_q",
    "RankResult",
    "greedy_play",
    "rank",
    "riemann_roch_check",
    "clifford_check",
    "enumerate_effective",
    "GonalityResult",
    "gonality",
]
