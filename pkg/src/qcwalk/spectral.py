"""Spectral machinery shared by the classical and quantum walks.

Both propagators come from one symmetric eigendecomposition of the
Laplacian: the classical (heat) semigroup exp(L t) and the quantum unitary
exp(i L t) differ only in how the eigenvalues are exponentiated. Computing
the decomposition once and reusing it across a whole time grid is what
keeps long curves cheap, so every walk-level routine accepts a
SpectralDecomposition rather than a raw matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Laplacian

__all__ = [
    "SpectralDecomposition",
    "DensityMatrix",
    "eigendecompose",
    "heat_propagator",
    "unitary_propagator",
    "uhlmann_fidelity",
]

#: eigenvalue magnitudes at or below this count as the flat zero mode
ZERO_MODE_TOL = 1e-9

_HERMITICITY_TOL = 1e-12
_TRACE_TOL = 1e-10
_NEGATIVITY_TOL = -1e-10


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigensystem of a graph Laplacian, sorted by eigenvalue magnitude.

    ``eigenvalues[0]`` is the zero mode (the flat vector for connected
    graphs); ``eigenvalues[1]`` is the algebraic connectivity up to sign.
    Columns of ``eigenvectors`` hold the matching orthonormal eigenvectors.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.eigenvalues, dtype=float)
        vecs = np.asarray(self.eigenvectors, dtype=float)
        if vals.ndim != 1 or vecs.shape != (vals.size, vals.size):
            raise ValueError("eigenvalues and eigenvectors have mismatched shapes")
        vals.setflags(write=False)
        vecs.setflags(write=False)
        object.__setattr__(self, "eigenvalues", vals)
        object.__setattr__(self, "eigenvectors", vecs)

    @property
    def n(self) -> int:
        return self.eigenvalues.size

    @property
    def is_connected(self) -> bool:
        # a repeated zero eigenvalue means more than one component
        return self.n == 1 or abs(self.eigenvalues[1]) > ZERO_MODE_TOL

    @property
    def fiedler(self) -> float:
        """Magnitude of the first nonzero eigenvalue (0.0 if disconnected)."""
        if self.n < 2:
            raise ValueError("fiedler value needs at least two nodes")
        mag = abs(float(self.eigenvalues[1]))
        return mag if mag > ZERO_MODE_TOL else 0.0


def eigendecompose(lap: Laplacian) -> SpectralDecomposition:
    """Symmetric eigendecomposition sorted by |eigenvalue|, zero mode first.

    numpy's eigh already returns ascending eigenvalues, but the Laplacian
    here is negative semidefinite, so ascending order puts the zero mode
    last; the stable argsort by modulus pins it at index 0 instead.
    """
    vals, vecs = np.linalg.eigh(lap.matrix)
    order = np.argsort(np.abs(vals), kind="stable")
    return SpectralDecomposition(vals[order], vecs[:, order])


def heat_propagator(sd: SpectralDecomposition, t: float) -> np.ndarray:
    """exp(L t): the classical transition-probability matrix at time t.

    Column j holds the occupation distribution after starting at node j.
    Because the Laplacian is symmetric with zero row sums, the result is
    doubly stochastic for t >= 0. Negative t is rejected: the semigroup
    does not run backwards.
    """
    t = float(t)
    if t < 0:
        raise ValueError(f"heat propagator needs t >= 0, got {t}")
    if t == 0.0:
        # exactly the identity, not the identity up to roundoff
        return np.eye(sd.n)
    # exp(lambda t) with lambda <= 0 underflows harmlessly to 0 for large t
    weights = np.exp(sd.eigenvalues * t)
    return (sd.eigenvectors * weights) @ sd.eigenvectors.T


def unitary_propagator(sd: SpectralDecomposition, t: float) -> np.ndarray:
    """exp(i L t): the quantum walk unitary at time t (complex, unitary)."""
    t = float(t)
    if t == 0.0:
        return np.eye(sd.n, dtype=complex)
    phases = np.exp(1j * sd.eigenvalues * t)
    return (sd.eigenvectors * phases) @ sd.eigenvectors.T


@dataclass(frozen=True)
class DensityMatrix:
    """Validated density matrix: Hermitian, unit trace, positive semidefinite."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("density matrix must be square")
        if np.abs(m - m.conj().T).max() > _HERMITICITY_TOL:
            raise ValueError("density matrix must be Hermitian")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > _TRACE_TOL:
            raise ValueError(f"density matrix trace must be 1, got {tr:.12g}")
        smallest = float(np.linalg.eigvalsh(m).min())
        if smallest < _NEGATIVITY_TOL:
            raise ValueError(f"density matrix has negative eigenvalue {smallest:.3e}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def diagonal(cls, p) -> "DensityMatrix":
        """Classical state: probabilities on the diagonal, no coherences."""
        p = np.asarray(p, dtype=float)
        return cls(np.diag(p).astype(complex))

    @classmethod
    def pure(cls, psi) -> "DensityMatrix":
        """Rank-one projector |psi><psi| from a normalized state vector."""
        psi = np.asarray(psi, dtype=complex)
        return cls(np.outer(psi, psi.conj()))


def _psd_sqrt(m: np.ndarray) -> np.ndarray:
    vals, vecs = np.linalg.eigh(m)
    vals = np.clip(vals, 0.0, None)
    return (vecs * np.sqrt(vals)) @ vecs.conj().T


def uhlmann_fidelity(rho1: DensityMatrix, rho2: DensityMatrix) -> float:
    """Fidelity [tr sqrt(sqrt(rho1) rho2 sqrt(rho1))]^2, clamped to [0, 1].

    Shortcut for rank-one inputs: if either state is pure |psi><psi| the
    fidelity collapses to <psi| rho |psi>, which is both faster and better
    conditioned than the nested square roots.
    """
    if rho1.n != rho2.n:
        raise ValueError("density matrices must have equal dimension")
    for pure, other in ((rho1, rho2), (rho2, rho1)):
        vals, vecs = np.linalg.eigh(pure.matrix)
        if vals[-1] > 1.0 - 1e-12:
            psi = vecs[:, -1]
            return float(np.clip((psi.conj() @ other.matrix @ psi).real, 0.0, 1.0))
    root = _psd_sqrt(rho1.matrix)
    inner = root @ rho2.matrix @ root
    vals = np.clip(np.linalg.eigvalsh(inner), 0.0, None)
    return float(np.clip(np.sqrt(vals).sum() ** 2, 0.0, 1.0))
