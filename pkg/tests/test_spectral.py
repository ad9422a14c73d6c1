"""
Tests for bands, scattering states, bound states and the special momenta.
"""
import math

import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from src.errors import ContractViolation, SpecialMomentumError, WindowError
from src.models import (
    BOUND_REGIONS,
    BoundState,
    BranchSign,
    DegenerateState,
    RegionLabel,
    RelativeState,
    ScatteringKind,
    UnitPhase,
    WalkParams,
)
from src.oracle import residual
from src.phase_math import angular_distance, arc_contains, arcs_disjoint
from src.spectral import (
    G_function,
    G_limit,
    G_range_arc,
    G_value,
    band_arcs,
    bound_state_quasi_energy_curve,
    bound_wavefunction,
    classify_momentum,
    degenerate_wavefunction,
    degeneracy_partners,
    find_bound_state,
    minimum_half_width,
    scattering_state,
    special_band_arcs,
    special_momentum_index,
    spectral_summary,
    stationary_state_p0,
    transmission,
)
from src.two_particle import antisymmetry_defect, omega_sr
from src.validation import SWEEP_COUPLINGS

PLUS, MINUS = BranchSign.PLUS, BranchSign.MINUS
ARC_KEYS = {"++f", "+-f", "++0", "++2", "+-(+1)", "+-(-1)"}


def _region_key(region: RegionLabel) -> str:
    return f"++{region.value}" if region.branch is PLUS else f"+-({region.value})"


def _closed(state: RelativeState) -> RelativeState:
    return RelativeState(y_min=state.y_min, amplitudes=state.amplitudes, periodic=True)


# ---------------------------------------------------------------------------
# Bands
# ---------------------------------------------------------------------------

def test_band_arcs_reference_momentum(params):
    bands = band_arcs(params, 0.55)
    assert set(bands.arcs) == ARC_KEYS
    assert sorted(phase.angle for phase in bands.excluded) == pytest.approx([-1.1, 1.1])

    pp = bands.arcs["++f"].ccw()
    assert pp.start.angle == pytest.approx(2.0676, abs=1e-4)
    assert pp.end.angle == pytest.approx(-2.0676, abs=1e-4)
    assert arc_contains(pp, UnitPhase(angle=math.pi))

    pm = bands.arcs["+-f"].ccw()
    assert pm.start.angle == pytest.approx(-0.6380, abs=1e-4)
    assert pm.end.angle == pytest.approx(0.6380, abs=1e-4)
    assert arc_contains(pm, UnitPhase(angle=0.0))


def test_continuous_bands_closed_region_arcs_open(params):
    bands = band_arcs(params, 0.55)
    for key, arc in bands.arcs.items():
        closed = key.endswith("f")
        assert arc.includes_start is closed
        assert arc.includes_end is closed


@pytest.mark.parametrize("p", [0.55, 0.3, 1.2, -2.0, 2.9])
def test_arcs_partition_the_circle(params, p):
    bands = band_arcs(params, p)
    arcs = list(bands.arcs.values())
    for i, a in enumerate(arcs):
        for b in arcs[i + 1 :]:
            assert arcs_disjoint(a, b)
    rng = np.random.default_rng(7)
    for angle in rng.uniform(-math.pi, math.pi, 2000):
        phase = UnitPhase(angle=float(angle))
        assert sum(arc_contains(arc, phase) for arc in arcs) == 1
    for excluded in bands.excluded:
        assert not any(arc_contains(arc, excluded) for arc in arcs)


@pytest.mark.parametrize("p", [0.0, math.pi / 2, -math.pi / 2, math.pi, 1e-11])
def test_generic_operations_reject_special_momenta(params, p):
    assert special_momentum_index(p) is not None
    with pytest.raises(SpecialMomentumError):
        band_arcs(params, p)


def test_special_band_arcs(params):
    zero = special_band_arcs(params, 0.0)
    assert zero.flat_eigenphase.angle == pytest.approx(0.0)
    assert set(zero.arcs) == {"++f", "++0", "++2"}
    half = special_band_arcs(params, math.pi / 2)
    assert half.flat_eigenphase.angle == pytest.approx(math.pi)
    assert set(half.arcs) == {"+-f", "+-(+1)", "+-(-1)"}


def test_region_curve_starts_at_the_arc_edge(params):
    for region in BOUND_REGIONS:
        curve = bound_state_quasi_energy_curve(params, 0.55, region, np.array([0.0, -0.5, -2.0]))
        assert np.max(np.abs(curve.imag)) < 1e-12
        edge = omega_sr(params, 0.55, region.z * math.pi / 2, PLUS, region.branch)
        assert curve[0].real == pytest.approx(edge.real)


# ---------------------------------------------------------------------------
# Momentum regions and degeneracy
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "k, s, r, expected",
    [
        (0.3 + 0.2j, PLUS, PLUS, None),
        (0.4 + 0.0j, PLUS, MINUS, RegionLabel.FREE),
        (-0.5j, PLUS, PLUS, RegionLabel.ZERO),
        (math.pi - 0.7j, PLUS, PLUS, RegionLabel.TWO),
        (math.pi / 2 - 0.5j, PLUS, MINUS, RegionLabel.PLUS_ONE),
        (-math.pi / 2 - 1.5j, PLUS, MINUS, RegionLabel.MINUS_ONE),
    ],
)
def test_classify_momentum(params, k, s, r, expected):
    assert classify_momentum(params, 0.55, k, s, r) is expected


def test_degeneracy_partners_listing():
    k = 0.4
    triples = [(d.s, d.r, d.k_real) for d in degeneracy_partners(PLUS, PLUS, k)]
    assert triples == [
        (PLUS, PLUS, pytest.approx(0.4)),
        (PLUS, PLUS, pytest.approx(-0.4)),
        (MINUS, MINUS, pytest.approx(math.pi - 0.4)),
        (MINUS, MINUS, pytest.approx(0.4 - math.pi)),
    ]
    mixed = [(d.s, d.r) for d in degeneracy_partners(PLUS, MINUS, k)]
    assert mixed == [(PLUS, MINUS), (MINUS, PLUS), (PLUS, MINUS), (MINUS, PLUS)]


@given(
    st.floats(min_value=-math.pi, max_value=math.pi),
    st.floats(min_value=-math.pi, max_value=math.pi),
    st.sampled_from(list(BranchSign)),
    st.sampled_from(list(BranchSign)),
)
def test_partners_share_one_eigenphase(p, k, s, r):
    params = WalkParams(mu=0.8)
    angles = [-omega_sr(params, p, d.k, d.s, d.r).real for d in degeneracy_partners(s, r, k)]
    assert max(angular_distance(a, angles[0]) for a in angles) < 1e-12


# ---------------------------------------------------------------------------
# Transmission and scattering states
# ---------------------------------------------------------------------------

@given(
    st.floats(min_value=0.1, max_value=1.4),
    st.floats(min_value=-math.pi, max_value=math.pi),
    st.floats(min_value=0.1, max_value=3.0),
    st.sampled_from([-1.0, 1.0]),
    st.sampled_from(list(BranchSign)),
)
@hyp_settings(max_examples=200)
def test_transmission_is_unimodular_on_real_momenta(p, k, chi, chi_sign, branch):
    t = transmission(WalkParams(mu=0.8), chi_sign * chi, p, k, branch)
    assert abs(t) == pytest.approx(1.0, abs=1e-9)


def test_transmission_is_one_without_interaction(params):
    assert transmission(params, 0.0, 0.55, 0.8, MINUS) == 1.0


@pytest.mark.parametrize("kind", list(ScatteringKind))
@pytest.mark.parametrize("branch", list(BranchSign))
@pytest.mark.parametrize("p, k, chi", [(0.55, 0.8, 1.0), (1.2, -2.1, -0.6), (-2.3, 0.4, 2.5)])
def test_scattering_states_are_eigenvectors(params, kind, branch, p, k, chi):
    state = scattering_state(params, chi, p, k, branch, kind, 12)
    phase = UnitPhase.from_quasi_energy(omega_sr(params, p, k, PLUS, branch).real)
    assert residual(params, chi, p, state, phase) < 1e-10
    assert antisymmetry_defect(state) < 1e-12
    if kind is ScatteringKind.FREE:
        assert np.all(state.at(0) == 0)


def test_scattering_state_needs_real_momentum(params):
    with pytest.raises(ContractViolation):
        scattering_state(params, 1.0, 0.55, 0.3 - 0.2j, PLUS, ScatteringKind.INTERACTING, 8)


# ---------------------------------------------------------------------------
# G functions
# ---------------------------------------------------------------------------

def test_g_endpoints_and_limits(params):
    for region in BOUND_REGIONS:
        expected = -1.0 if region in (RegionLabel.ZERO, RegionLabel.TWO) else 1.0
        assert complex(G_value(params, 0.55, region, 0.0)) == pytest.approx(expected, abs=1e-12)
        far = complex(G_value(params, 0.55, region, -40.0))
        assert abs(far - G_limit(params, 0.55, region).point) < 1e-10
        assert abs(abs(far) - 1.0) < 1e-12


def test_g_limits_at_reference_momentum(params):
    assert G_limit(params, 0.55, RegionLabel.ZERO).angle == pytest.approx(-1.1)
    assert G_limit(params, 0.55, RegionLabel.TWO).angle == pytest.approx(1.1)
    assert G_limit(params, 0.55, RegionLabel.PLUS_ONE).angle == pytest.approx(-1.1)
    assert G_limit(params, 0.55, RegionLabel.MINUS_ONE).angle == pytest.approx(1.1)


def test_g_ranges_are_disjoint(params):
    arcs = [G_range_arc(params, 0.55, region) for region in BOUND_REGIONS]
    for i, a in enumerate(arcs):
        for b in arcs[i + 1 :]:
            assert arcs_disjoint(a, b)
    assert sum(arc.span for arc in arcs) == pytest.approx(2 * math.pi)


def test_g_function_rejects_growing_side(params):
    with pytest.raises(ContractViolation):
        G_function(params, 0.55, RegionLabel.ZERO, 0.5)


# ---------------------------------------------------------------------------
# Bound and degenerate states
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("chi", SWEEP_COUPLINGS)
@pytest.mark.parametrize("p", [0.3, 0.55, 1.2])
def test_bound_state_solves_vanishing_transmission(params, chi, p):
    bound = find_bound_state(params, chi, p)
    assert isinstance(bound, BoundState)
    assert bound.k_imag < 0
    assert abs(transmission(params, chi, p, bound.k_tilde, bound.branch)) < 1e-10
    omega = omega_sr(params, p, bound.k_tilde, PLUS, bound.branch)
    assert abs(omega.imag) < 1e-9
    assert angular_distance(bound.eigenphase.angle, -omega.real) < 1e-12
    assert arc_contains(band_arcs(params, p).arcs[_region_key(bound.region)], bound.eigenphase)


@pytest.mark.parametrize("chi", [0.0, math.pi, -math.pi])
def test_no_bound_state_for_real_coupling_phase(params, chi):
    assert find_bound_state(params, chi, 0.55) is None


@pytest.mark.parametrize("sign", list(BranchSign))
def test_degenerate_state_at_coupling_two_p(params, sign):
    p = 0.55
    chi = 2.0 * sign.sign * p
    state = find_bound_state(params, chi, p)
    assert isinstance(state, DegenerateState)
    assert state.sign is sign
    assert state.eigenphase.angle == pytest.approx(chi)
    assert state.eta == pytest.approx(params.mu / params.nu)

    vector = degenerate_wavefunction(params, p, sign, 3)
    assert vector.norm() == pytest.approx(1.0)
    assert np.all(vector.amplitudes[np.abs(vector.y_values) > 1] == 0)
    assert residual(params, chi, p, _closed(vector), state.eigenphase) < 1e-12


def test_bound_wavefunction_decays(params):
    bound = find_bound_state(params, math.pi / 2, 0.55)
    state = bound_wavefunction(params, math.pi / 2, 0.55, bound)
    assert state.norm() == pytest.approx(1.0)
    assert antisymmetry_defect(state) < 1e-12
    norms = np.linalg.norm(state.amplitudes, axis=1)
    half = (state.n_sites - 1) // 2
    # amplitude ratio over two sites is e^{2 k_I}
    assert norms[half + 6] / norms[half + 4] == pytest.approx(math.exp(2 * bound.k_imag), rel=1e-8)
    assert residual(params, math.pi / 2, 0.55, state, bound.eigenphase) < 1e-10


def test_bound_wavefunction_window_check(params):
    bound = find_bound_state(params, math.pi / 5, 0.55)
    needed = minimum_half_width(bound)
    assert math.exp(2 * bound.k_imag * needed) <= 1e-12
    with pytest.raises(WindowError):
        bound_wavefunction(params, math.pi / 5, 0.55, bound, needed - 1)


# ---------------------------------------------------------------------------
# Stationary states and summaries
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("chi", [0.0, 1.0])
@pytest.mark.parametrize("kind", list(ScatteringKind))
def test_stationary_states_have_eigenvalue_one(params, chi, kind):
    state = stationary_state_p0(params, chi, 2, kind)
    assert state.norm() == pytest.approx(1.0)
    assert residual(params, chi, 0.0, state, UnitPhase(angle=0.0)) < 1e-8


@pytest.mark.parametrize("n", [0, -1, -2])
def test_stationary_state_rejects_non_positive_labels(params, n):
    with pytest.raises(ContractViolation):
        stationary_state_p0(params, 0.5, n, ScatteringKind.FREE)


def test_stationary_state_needs_enough_quadrature(params):
    with pytest.raises(ContractViolation):
        stationary_state_p0(params, 0.5, 1, ScatteringKind.FREE, quadrature_points=32)


@pytest.mark.parametrize("kind", list(ScatteringKind))
def test_distinct_stationary_states_are_orthogonal(params, kind):
    states = {n: stationary_state_p0(params, 0.7, n, kind, half_width=60) for n in (1, 2, 3)}
    for n, m in [(1, 2), (1, 3), (2, 3)]:
        assert abs(states[n].vdot(states[m])) < 1e-8
    assert states[1].vdot(states[1]) == pytest.approx(1.0)


def test_summary_at_generic_momentum(params):
    summary = spectral_summary(params, math.pi / 2, 0.55)
    assert summary.error is None
    assert not summary.special
    assert summary.bound_state is not None
    assert summary.discrete_eigenphase == summary.bound_state.eigenphase


def test_summary_at_special_momentum(params):
    summary = spectral_summary(params, math.pi / 2, 0.0)
    assert summary.error is None
    assert summary.special
    assert summary.bands.flat_eigenphase.angle == pytest.approx(0.0)


def test_summary_degenerate_coupling(params):
    summary = spectral_summary(params, 1.1, 0.55)
    assert summary.degenerate is not None
    assert summary.bound_state is None
