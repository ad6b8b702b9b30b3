"""qcwalk: how far a quantum walk strays from its classical twin.

A continuous-time classical random walk on a finite undirected graph
evolves probabilities as exp(L t); the matching quantum walk evolves
amplitudes as exp(i L t) with the same Laplacian L. This package computes
the dynamical distance between the two evolutions,

    D_QC(t) = max_j [1 - F_j(t)],    F_j(t) = sum_k p_kj(t) |a_kj(t)|^2,

its node-conditioned and node-averaged variants, the coherence and
classical-fidelity split with its short- and long-time asymptotes, and the
numerical verification that localized launches are the worst case. A CLI
(`qcwalk`) exposes graph generation, distance sweeps to CSV, figure-style
presets, and the verification suite.
"""

from .graph import (
    Graph,
    Laplacian,
    graph_from_edges,
    generate,
    laplacian,
    degree,
    degree_sequence,
    max_degree,
    average_degree,
    is_connected,
    fiedler_value,
    read_edge_list,
    write_edge_list,
)
from .spectral import (
    DensityMatrix,
    SpectralDecomposition,
    eigendecompose,
    heat_propagator,
    unitary_propagator,
    uhlmann_fidelity,
)
from .walks import (
    classical_distribution,
    quantum_amplitudes,
    localized_fidelity,
    coherence,
    classical_fidelity,
)
from .distance import (
    AsymptoticsReport,
    DisconnectedGraphError,
    DistanceCurve,
    OptimalityReport,
    asymptotics_report,
    average_distance,
    conditional_distance,
    delta,
    distance_curve,
    gamma_ratio,
    long_asymptote,
    qc_distance,
    short_asymptote,
    verify_localized_optimality,
)
from .config import TimeGrid, GraphSource, RunConfig, QUANTITIES, default_grid

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "Laplacian",
    "graph_from_edges",
    "generate",
    "laplacian",
    "degree",
    "degree_sequence",
    "max_degree",
    "average_degree",
    "is_connected",
    "fiedler_value",
    "read_edge_list",
    "write_edge_list",
    "DensityMatrix",
    "SpectralDecomposition",
    "eigendecompose",
    "heat_propagator",
    "unitary_propagator",
    "uhlmann_fidelity",
    "classical_distribution",
    "quantum_amplitudes",
    "localized_fidelity",
    "coherence",
    "classical_fidelity",
    "AsymptoticsReport",
    "DisconnectedGraphError",
    "DistanceCurve",
    "OptimalityReport",
    "asymptotics_report",
    "average_distance",
    "conditional_distance",
    "delta",
    "distance_curve",
    "gamma_ratio",
    "long_asymptote",
    "qc_distance",
    "short_asymptote",
    "verify_localized_optimality",
    "TimeGrid",
    "GraphSource",
    "RunConfig",
    "QUANTITIES",
    "default_grid",
    "__version__",
]
