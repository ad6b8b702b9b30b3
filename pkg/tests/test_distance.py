import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qcwalk import fiedler_value, generate, graph_from_edges, laplacian
from qcwalk.distance import (
    AsymptoticsReport,
    DisconnectedGraphError,
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
from qcwalk.spectral import eigendecompose
from qcwalk.walks import localized_fidelity

K2 = eigendecompose(laplacian(generate("complete", 2)))
RING11 = eigendecompose(laplacian(generate("ring", 11)))
STAR7 = eigendecompose(laplacian(generate("star", 7)))
DISCONNECTED = eigendecompose(laplacian(graph_from_edges(4, [(0, 1), (2, 3)])))

FAMILY = [
    ("complete(5)", generate("complete", 5)),
    ("ring(11)", generate("ring", 11)),
    ("star(7)", generate("star", 7)),
    ("wheel(9)", generate("wheel", 9)),
    ("path(5)", generate("path", 5)),
    ("random(8,4)", generate("random_connected", 8, extra=4, seed=2)),
]


# --- conditional, max, average ----------------------------------------------------


def test_zero_time_values():
    assert conditional_distance(K2, 0, 0.0) == 0.0
    assert qc_distance(K2, 0.0) == (0.0, 0)
    assert average_distance(K2, 0.0) == 0.0


def test_k2_closed_form_and_slope():
    for t in (0.3, 1.1, 2.4):
        want = (1 - np.exp(-2 * t) * np.cos(2 * t)) / 2
        assert conditional_distance(K2, 0, t) == pytest.approx(want, abs=1e-12)
    h = 1e-6
    assert conditional_distance(K2, 0, h) / h == pytest.approx(1.0, rel=1e-4)


def test_long_time_plateau():
    for label, g in FAMILY:
        sd = eigendecompose(laplacian(g))
        t = 50.0 / fiedler_value(g)
        for j in range(g.n):
            assert conditional_distance(sd, j, t) == pytest.approx(
                1 - 1 / g.n, abs=1e-2
            ), label


def test_qc_distance_argmax_is_max_degree_early():
    value, node = qc_distance(STAR7, 1e-3)
    assert node == 0
    assert value == pytest.approx(6e-3, rel=0.05)


def test_qc_tie_break_smallest_index():
    # exact ties resolve to the smallest index (all-zero column at t = 0);
    # regular-graph ties at t > 0 are only roundoff-degenerate, so there we
    # check the winner is equivalent to node 0, not that it is node 0
    assert qc_distance(RING11, 0.0) == (0.0, 0)
    for t in (0.4, 2.0):
        value, node = qc_distance(RING11, t)
        assert value == pytest.approx(conditional_distance(RING11, 0, t), abs=1e-12)


def test_average_equals_max_on_regular_graphs():
    for t in (0.05, 0.7, 3.0, 20.0):
        value, _ = qc_distance(RING11, t)
        assert average_distance(RING11, t) == pytest.approx(value, abs=1e-12)


@given(st.floats(0.0, 30.0, allow_nan=False))
@settings(max_examples=40, deadline=None)
def test_distance_bounds(t):
    value, node = qc_distance(STAR7, t)
    assert 0.0 <= value <= 1.0
    assert 0 <= node < 7
    assert 0.0 <= average_distance(STAR7, t) <= value + 1e-15


# --- curves ------------------------------------------------------------------------


def test_curve_matches_pointwise_bitwise():
    times = np.geomspace(1e-2, 20.0, 25)
    curve = distance_curve(STAR7, times)
    for i, t in enumerate(times):
        for j in range(7):
            assert curve.conditional[j, i] == conditional_distance(STAR7, j, t)
    assert np.array_equal(curve.qc, curve.conditional.max(axis=0))
    assert np.array_equal(curve.average, curve.conditional.mean(axis=0))
    qc_vals = [qc_distance(STAR7, t) for t in times]
    assert np.array_equal(curve.qc, [v for v, _ in qc_vals])
    assert np.array_equal(curve.argmax_node, [n for _, n in qc_vals])


def test_curve_at_zero_grid():
    curve = distance_curve(K2, [0.0])
    assert np.array_equal(curve.conditional, np.zeros((2, 1)))
    assert curve.qc[0] == 0.0


def test_curve_k5_reaches_plateau():
    curve = distance_curve(eigendecompose(laplacian(generate("complete", 5))), np.geomspace(1e-2, 10, 60))
    assert abs(curve.qc[-1] - 0.8) <= 1e-3


def test_curve_values_in_unit_interval():
    curve = distance_curve(RING11, np.geomspace(1e-2, 300, 80))
    assert curve.conditional.min() >= 0.0
    assert curve.conditional.max() <= 1.0


def test_curve_grid_validation():
    with pytest.raises(ValueError):
        distance_curve(K2, [])
    with pytest.raises(ValueError):
        distance_curve(K2, [1.0, 0.5])
    with pytest.raises(ValueError):
        distance_curve(K2, [-1.0, 2.0])
    with pytest.raises(ValueError):
        distance_curve(K2, [1.0, 1.0])


# --- asymptotes and diagnostics ------------------------------------------------------


def test_asymptotes_at_zero():
    assert short_asymptote(K2, 0, 0.0) == 0.0
    assert long_asymptote(K2, 0, 0.0) == pytest.approx(0.0, abs=1e-12)


def test_k2_short_asymptote_closed_form():
    for t in (0.1, 0.8):
        assert short_asymptote(K2, 0, t) == pytest.approx(abs(np.sin(2 * t)) / 2, abs=1e-12)
    assert short_asymptote(K2, 0, 0.01) == pytest.approx(0.01, rel=1e-3)


def test_long_asymptote_matches_distance_late():
    for label, g in FAMILY:
        sd = eigendecompose(laplacian(g))
        t = 50.0 / fiedler_value(g)
        for j in range(g.n):
            gap = abs(conditional_distance(sd, j, t) - long_asymptote(sd, j, t))
            assert gap <= 1e-2, label


def test_gamma_limits():
    assert gamma_ratio(RING11, "S", 1e-3) == pytest.approx(1.0, abs=0.01)
    t_inf = 50.0 / fiedler_value(generate("ring", 11))
    assert gamma_ratio(RING11, "L", t_inf) == pytest.approx(1.0, abs=1e-3)


def test_gamma_undefined_at_zero():
    assert gamma_ratio(RING11, "S", 0.0) is None
    assert gamma_ratio(RING11, "L", 0.0) is None


def test_gamma_selector_accepts_aliases():
    t = 0.5
    assert gamma_ratio(RING11, "short", t) == gamma_ratio(RING11, "S", t)
    assert gamma_ratio(RING11, "long", t) == gamma_ratio(RING11, "L", t)
    with pytest.raises(ValueError):
        gamma_ratio(RING11, "X", t)


def test_delta_converges_to_one_over_n():
    t_inf = 50.0 / fiedler_value(generate("ring", 11))
    assert delta(RING11, 0, t_inf) == pytest.approx(1 / 11, abs=1e-2)
    assert delta(RING11, 0, 3 * t_inf) == pytest.approx(1 / 11, abs=1e-2)


def test_delta_starts_at_one():
    assert delta(RING11, 0, 0.0) == pytest.approx(1.0, abs=1e-12)


def test_asymptotics_report_fields():
    rep = asymptotics_report(STAR7, 0, 0.5)
    assert isinstance(rep, AsymptoticsReport)
    assert rep.short == short_asymptote(STAR7, 0, 0.5)
    assert rep.long == long_asymptote(STAR7, 0, 0.5)
    assert rep.gamma_s == gamma_ratio(STAR7, "S", 0.5)
    assert rep.gamma_l == gamma_ratio(STAR7, "L", 0.5)
    assert rep.delta == delta(STAR7, 0, 0.5)
    zero = asymptotics_report(STAR7, 0, 0.0)
    assert zero.gamma_s is None and zero.gamma_l is None


# --- connectivity guard ----------------------------------------------------------------


def test_disconnected_graphs_are_refused():
    with pytest.raises(DisconnectedGraphError):
        conditional_distance(DISCONNECTED, 0, 1.0)
    with pytest.raises(DisconnectedGraphError):
        qc_distance(DISCONNECTED, 1.0)
    with pytest.raises(DisconnectedGraphError):
        average_distance(DISCONNECTED, 1.0)
    with pytest.raises(DisconnectedGraphError):
        distance_curve(DISCONNECTED, [1.0])
    with pytest.raises(DisconnectedGraphError):
        short_asymptote(DISCONNECTED, 0, 1.0)
    with pytest.raises(DisconnectedGraphError):
        gamma_ratio(DISCONNECTED, "S", 1.0)
    with pytest.raises(DisconnectedGraphError):
        delta(DISCONNECTED, 0, 1.0)
    with pytest.raises(DisconnectedGraphError):
        verify_localized_optimality(DISCONNECTED, 2, [1.0])


# --- localized optimality ----------------------------------------------------------------


def test_optimality_margins_nonnegative():
    g = generate("random_connected", 6, extra=3, seed=9)
    sd = eigendecompose(laplacian(g))
    report = verify_localized_optimality(sd, 25, [0.1, 0.5, 1.0, 3.0], seed=9)
    assert report.margins.shape == (25, 4)
    assert report.passed
    assert report.worst_violation >= -1e-8


def test_optimality_k2_uniform_state():
    # rho = I/2 pushed through both maps must beat the localized floor
    report = verify_localized_optimality(K2, 10, [0.4, 1.7], seed=0)
    assert report.passed


def test_optimality_localized_state_margin_zero():
    # z = indicator of node j: both channel outputs reduce to the localized
    # pair, so the full fidelity must equal F_j and the margin vanish
    from qcwalk.spectral import DensityMatrix, heat_propagator, unitary_propagator, uhlmann_fidelity

    sd = STAR7
    t = 0.9
    p = heat_propagator(sd, t)
    u = unitary_propagator(sd, t)
    for j in (0, 3):
        z = np.eye(7)[j]
        rho_c = DensityMatrix.diagonal(p @ z)
        rho_q = DensityMatrix((u * z) @ u.conj().T)
        fid = uhlmann_fidelity(rho_c, rho_q)
        assert fid == pytest.approx(localized_fidelity(sd, j, t), abs=1e-9)


def test_optimality_input_validation():
    with pytest.raises(ValueError):
        verify_localized_optimality(K2, 0, [1.0])
