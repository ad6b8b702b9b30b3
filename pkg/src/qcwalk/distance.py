"""The quantum-classical distance, its asymptotes, and the optimality check.

The headline quantity is

    D_QC(t) = max_j D_QC(t|j),    D_QC(t|j) = 1 - F_j(t),

the worst-case infidelity between the classically evolved and quantum
evolved walker over all localized launch nodes. Restricting to localized
starts is justified by a concavity argument (verified numerically here by
:func:`verify_localized_optimality`): among all diagonal initial states the
minimum fidelity is attained on a basis state.

Two closed-form asymptotes bracket the exact curve,

    short:  D^S(t|j) = C_j(t) / 2
    long:   D^L(t|j) = 1 - G_j(t)^2 + C_j(t) / n

and the diagnostics gamma_S, gamma_L (ratios of the exact maximum to each
asymptote's maximum) and delta = G^2 - C/n quantify where each regime
holds. All operations require a connected graph: the stationary state and
the long-time laws presuppose a single component.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import walks
from .spectral import (
    DensityMatrix,
    SpectralDecomposition,
    heat_propagator,
    unitary_propagator,
    uhlmann_fidelity,
)
from .walks import coherence, classical_fidelity, localized_fidelity

__all__ = [
    "DisconnectedGraphError",
    "DistanceCurve",
    "AsymptoticsReport",
    "OptimalityReport",
    "conditional_distance",
    "qc_distance",
    "average_distance",
    "distance_curve",
    "short_asymptote",
    "long_asymptote",
    "gamma_ratio",
    "delta",
    "asymptotics_report",
    "verify_localized_optimality",
]

#: asymptote maxima at or below this are treated as vanishing (ratio undefined)
RATIO_FLOOR = 1e-12

#: slack allowed before an optimality margin counts as a real violation
VIOLATION_TOL = 1e-8


class DisconnectedGraphError(ValueError):
    """Raised when a distance quantity is requested for a disconnected graph."""


def _require_connected(sd: SpectralDecomposition) -> None:
    if not sd.is_connected:
        raise DisconnectedGraphError(
            "graph is disconnected (repeated zero Laplacian eigenvalue); "
            "distance quantities presuppose a single component"
        )


def conditional_distance(sd: SpectralDecomposition, j: int, t: float) -> float:
    """D_QC(t|j) = 1 - F_j(t), the distance conditioned on launch node j."""
    _require_connected(sd)
    return 1.0 - localized_fidelity(sd, j, t)


def qc_distance(sd: SpectralDecomposition, t: float) -> tuple[float, int]:
    """(max_j D_QC(t|j), argmax node); ties go to the smallest node index."""
    _require_connected(sd)
    cond = np.array([conditional_distance(sd, j, t) for j in range(sd.n)])
    j = int(np.argmax(cond))
    return float(cond[j]), j


def average_distance(sd: SpectralDecomposition, t: float) -> float:
    """Mean of D_QC(t|j) over launch nodes; equals the max on regular graphs."""
    _require_connected(sd)
    cond = [conditional_distance(sd, j, t) for j in range(sd.n)]
    return float(np.mean(cond))


@dataclass(frozen=True)
class DistanceCurve:
    """Distance quantities tabulated over a time grid.

    ``conditional[j, i]`` is D_QC(times[i] | j); ``qc``, ``argmax_node``
    and ``average`` are the per-time maximum, its node, and the node mean,
    all derived exactly from ``conditional``.
    """

    times: np.ndarray
    conditional: np.ndarray
    qc: np.ndarray
    argmax_node: np.ndarray
    average: np.ndarray

    def __post_init__(self):
        for name in ("times", "conditional", "qc", "argmax_node", "average"):
            arr = np.asarray(getattr(self, name))
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        if self.conditional.shape != (self.conditional.shape[0], self.times.size):
            raise ValueError("conditional matrix does not match the time grid")

    @property
    def n(self) -> int:
        return self.conditional.shape[0]


def _check_grid(times) -> np.ndarray:
    times = np.asarray(times, dtype=float)
    if times.ndim != 1 or times.size == 0:
        raise ValueError("time grid must be a nonempty 1-d array")
    if times[0] < 0:
        raise ValueError("time grid must be nonnegative")
    if times.size > 1 and not np.all(np.diff(times) > 0):
        raise ValueError("time grid must be strictly increasing")
    return times


def distance_curve(sd: SpectralDecomposition, times) -> DistanceCurve:
    """Tabulate D_QC(t|j) on a grid, plus the per-time max and mean.

    Each cell is computed by the same pointwise call a user would make, so
    curve values are bitwise identical to individual conditional_distance
    evaluations and independent of any internal work partitioning.
    """
    _require_connected(sd)
    times = _check_grid(times)
    cond = np.empty((sd.n, times.size))
    for i, t in enumerate(times):
        for j in range(sd.n):
            cond[j, i] = conditional_distance(sd, j, t)
    argmax = np.argmax(cond, axis=0)
    return DistanceCurve(
        times=times,
        conditional=cond,
        qc=cond.max(axis=0),
        argmax_node=argmax,
        average=cond.mean(axis=0),
    )


def short_asymptote(sd: SpectralDecomposition, j: int, t: float) -> float:
    """Short-time law D^S(t|j) = C_j(t) / 2."""
    _require_connected(sd)
    return coherence(sd, j, t) / 2.0


def long_asymptote(sd: SpectralDecomposition, j: int, t: float) -> float:
    """Long-time law D^L(t|j) = 1 - G_j(t)^2 + C_j(t) / n."""
    _require_connected(sd)
    g = classical_fidelity(sd, j, t)
    c = coherence(sd, j, t)
    return 1.0 - g * g + c / sd.n


_ASYMPTOTES = {"S": short_asymptote, "L": long_asymptote}


def gamma_ratio(sd: SpectralDecomposition, which: str, t: float) -> float | None:
    """gamma_K(t) = D_QC(t) / D^K_QC(t) for K in {S, L}.

    Both numerator and denominator are maximized over launch nodes. When
    the asymptote maximum vanishes (below RATIO_FLOOR, e.g. at t = 0 where
    both distances are 0) the ratio is undefined and None is returned
    rather than a 0/0 quotient. Ratios may exceed 1.
    """
    _require_connected(sd)
    key = {"s": "S", "short": "S", "l": "L", "long": "L"}.get(str(which).lower())
    if key is None:
        raise ValueError(f"asymptote selector must be 'S' or 'L', got {which!r}")
    asymptote = _ASYMPTOTES[key]
    denom = max(asymptote(sd, j, t) for j in range(sd.n))
    if denom <= RATIO_FLOOR:
        return None
    value, _ = qc_distance(sd, t)
    return value / denom


def delta(sd: SpectralDecomposition, j: int, t: float) -> float:
    """delta_j(t) = G_j(t)^2 - C_j(t) / n; converges to 1/n at long times."""
    _require_connected(sd)
    g = classical_fidelity(sd, j, t)
    return g * g - coherence(sd, j, t) / sd.n


@dataclass(frozen=True)
class AsymptoticsReport:
    """Asymptote values and diagnostics for one (launch node, time) pair.

    ``short``, ``long`` and ``delta`` are node-local; the gamma ratios are
    graph-level (both sides maximized over nodes) and None when undefined.
    """

    node: int
    t: float
    short: float
    long: float
    gamma_s: float | None
    gamma_l: float | None
    delta: float


def asymptotics_report(sd: SpectralDecomposition, j: int, t: float) -> AsymptoticsReport:
    return AsymptoticsReport(
        node=int(j),
        t=float(t),
        short=short_asymptote(sd, j, t),
        long=long_asymptote(sd, j, t),
        gamma_s=gamma_ratio(sd, "S", t),
        gamma_l=gamma_ratio(sd, "L", t),
        delta=delta(sd, j, t),
    )


@dataclass(frozen=True)
class OptimalityReport:
    """Margins from the localized-optimality check.

    ``margins[s, i]`` is fidelity(E_C(rho_s), E_Q(rho_s)) minus
    min_j F_j(t_i) for the s-th sampled diagonal state. Nonnegative margins
    mean localized states really do attain the fidelity minimum; roundoff
    as far down as -VIOLATION_TOL is tolerated.
    """

    margins: np.ndarray
    t_values: np.ndarray

    def __post_init__(self):
        for name in ("margins", "t_values"):
            arr = np.asarray(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def worst_violation(self) -> float:
        return float(self.margins.min())

    @property
    def passed(self) -> bool:
        return self.worst_violation >= -VIOLATION_TOL


def verify_localized_optimality(
    sd: SpectralDecomposition,
    n_samples: int,
    t_values,
    seed: int = 0,
) -> OptimalityReport:
    """Check that localized starts minimize the classical-quantum fidelity.

    Draws ``n_samples`` diagonal initial states with Dirichlet-uniform
    weights z, pushes each through both evolutions,

        E_C(rho) = diag(P(t) z)          (classical, dephased)
        E_Q(rho) = U(t) diag(z) U(t)^dag (quantum)

    and compares the full Uhlmann fidelity of the pair against the smallest
    localized fidelity min_j F_j(t). The full fidelity should never fall
    below that minimum. Cost is one dense eigenproblem per sample and time,
    so keep n at desk scale (<= 10 or so).
    """
    _require_connected(sd)
    n_samples = int(n_samples)
    if n_samples < 1:
        raise ValueError("need at least one sample")
    t_values = np.atleast_1d(np.asarray(t_values, dtype=float))
    rng = np.random.Generator(np.random.PCG64(int(seed)))
    n = sd.n

    margins = np.empty((n_samples, t_values.size))
    for i, t in enumerate(t_values):
        p = heat_propagator(sd, float(t))
        u = unitary_propagator(sd, float(t))
        # attribute lookup, not a frozen reference: test hooks may patch it
        floor = min(walks.localized_fidelity(sd, j, float(t)) for j in range(n))
        for s in range(n_samples):
            z = rng.dirichlet(np.ones(n))
            rho_c = DensityMatrix.diagonal(np.clip(p @ z, 0.0, None))
            rho_q = DensityMatrix((u * z) @ u.conj().T)
            fid = uhlmann_fidelity(rho_c, rho_q)
            margins[s, i] = fid - floor
    return OptimalityReport(margins=margins, t_values=t_values)
