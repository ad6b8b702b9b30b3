"""Node-local observables of the paired classical and quantum walks.

Every function here conditions on a launch node j: the classical walk
starts from the point mass at j and the quantum walk from the basis state
|j>. The three scalar summaries are

* localized fidelity  F_j(t) = sum_k p_kj |a_kj|^2,
  the overlap between the classical occupation distribution and the quantum
  one, weighted so it equals the Uhlmann fidelity between the dephased
  classical state and the pure quantum state;
* coherence           C_j(t) = (sum_k |a_kj|)^2 - 1,
  the l1 coherence of the quantum state in the node basis, rescaled so a
  basis state gives 0 and a flat superposition gives n - 1;
* classical fidelity  G_j(t) = sum_k sqrt(p_kj) |a_kj|,
  the Bhattacharyya overlap between the classical distribution and the
  quantum measurement distribution |a|^2.

Here p_kj is column j of exp(L t) and a_kj is column j of exp(i L t).
"""

from __future__ import annotations

import numpy as np

from .spectral import SpectralDecomposition, heat_propagator, unitary_propagator

__all__ = [
    "classical_distribution",
    "quantum_amplitudes",
    "localized_fidelity",
    "coherence",
    "classical_fidelity",
]

#: how negative a computed probability may be before we call it a bug
_NEGATIVE_PROBABILITY_TOL = -1e-10


def _check_node(sd: SpectralDecomposition, j: int) -> int:
    j = int(j)
    if not 0 <= j < sd.n:
        raise ValueError(f"node {j} out of range for n={sd.n}")
    return j


def classical_distribution(sd: SpectralDecomposition, j: int, t: float) -> np.ndarray:
    """Occupation probabilities p_.j(t) of the classical walk started at j.

    Entries are clipped to [0, 1] after checking that no entry is negative
    beyond roundoff; genuinely negative values indicate a corrupted
    decomposition and raise.
    """
    j = _check_node(sd, j)
    p = heat_propagator(sd, float(t))[:, j]
    smallest = float(p.min())
    if smallest < _NEGATIVE_PROBABILITY_TOL:
        raise ValueError(f"classical distribution has negative entry {smallest:.3e}")
    return np.clip(p, 0.0, 1.0)


def quantum_amplitudes(sd: SpectralDecomposition, j: int, t: float) -> np.ndarray:
    """Amplitudes a_.j(t) of the quantum walk started at basis state j."""
    j = _check_node(sd, j)
    return unitary_propagator(sd, float(t))[:, j]


def localized_fidelity(sd: SpectralDecomposition, j: int, t: float) -> float:
    """F_j(t) = sum_k p_kj |a_kj|^2, clamped into [0, 1]."""
    p = classical_distribution(sd, j, t)
    a = quantum_amplitudes(sd, j, t)
    return float(np.clip(p @ (np.abs(a) ** 2), 0.0, 1.0))


def coherence(sd: SpectralDecomposition, j: int, t: float) -> float:
    """C_j(t) = (sum_k |a_kj|)^2 - 1, clamped to be nonnegative.

    Ranges from 0 (quantum walker still on one node) to n - 1 (flat
    superposition over all nodes).
    """
    a = quantum_amplitudes(sd, j, t)
    return float(max(np.abs(a).sum() ** 2 - 1.0, 0.0))


def classical_fidelity(sd: SpectralDecomposition, j: int, t: float) -> float:
    """Bhattacharyya overlap G_j(t) = sum_k sqrt(p_kj) |a_kj|, in [0, 1]."""
    p = classical_distribution(sd, j, t)
    a = quantum_amplitudes(sd, j, t)
    return float(np.clip(np.sqrt(p) @ np.abs(a), 0.0, 1.0))
