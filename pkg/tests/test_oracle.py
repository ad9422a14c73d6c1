"""
Tests for the finite-ring diagonalization and its spectrum classification.
"""
import math

import numpy as np
import pytest

from src.errors import ContractViolation, RangeError
from src.models import BoundState, WalkParams
from src.oracle import (
    band_set_distance,
    classify_spectrum,
    completeness_defect,
    diagonalize_ring,
    eigenvector_state,
    free_ring_eigenphases,
    in_band_phases,
    localization_length,
    residual,
)
from src.phase_math import angular_distance
from src.spectral import band_arcs, find_bound_state, special_band_arcs
from src.validation import SWEEP_COUPLINGS


@pytest.fixture(scope="module")
def bound_ring():
    params = WalkParams(mu=0.8)
    return params, diagonalize_ring(params, math.pi / 2, 0.55, 129)


def test_sector_dimensions_and_completeness(params):
    spec = diagonalize_ring(params, 1.0, 0.55, 33)
    assert spec.eigenphases.shape == (4 * 33,)
    assert len(spec.antisymmetric_indices) == 2 * 33 - 1
    assert completeness_defect(spec) < 1e-10


def test_eigenvectors_have_small_residuals(params):
    spec = diagonalize_ring(params, -0.7, 1.2, 33)
    for index in spec.antisymmetric_indices[::7]:
        state = eigenvector_state(spec, index)
        assert residual(params, -0.7, 1.2, state, spec.phases[index]) < 1e-10


def test_free_ring_matches_dispersion(params):
    spec = diagonalize_ring(params, 0.0, 0.55, 33)
    free = free_ring_eigenphases(params, 0.55, 33)
    for index in spec.antisymmetric_indices:
        gaps = [angular_distance(spec.eigenphases[index], angle) for angle in free]
        assert min(gaps) < 1e-9


@pytest.mark.parametrize("n_sites", [4, 3, 1027])
def test_rejects_bad_ring_sizes(params, n_sites):
    with pytest.raises(ContractViolation):
        diagonalize_ring(params, 0.5, 0.55, n_sites)


def test_single_isolated_eigenphase_matches_bound_state(bound_ring):
    params, spec = bound_ring
    classes = classify_spectrum(spec, band_arcs(params, 0.55))
    assert classes.ambiguous == []
    assert len(classes.isolated) == 1
    bound = find_bound_state(params, math.pi / 2, 0.55)
    found = spec.eigenphases[classes.isolated[0]]
    assert angular_distance(found, bound.eigenphase.angle) < 1e-6


def test_no_isolated_eigenphase_without_interaction(params):
    spec = diagonalize_ring(params, 0.0, 0.55, 65)
    classes = classify_spectrum(spec, band_arcs(params, 0.55))
    assert classes.isolated == []
    assert classes.ambiguous == []
    assert len(classes.in_band) == 2 * 65 - 1


def test_zero_band_tolerance_leaves_everything_ambiguous(params):
    spec = diagonalize_ring(params, 1.0, 0.55, 33)
    classes = classify_spectrum(spec, band_arcs(params, 0.55), delta_band=0.0)
    assert classes.in_band == []
    assert classes.isolated == []
    assert len(classes.ambiguous) == 2 * 33 - 1


def test_flat_band_grows_with_ring(params):
    counts = []
    for n_sites in (33, 65):
        spec = diagonalize_ring(params, 1.0, 0.0, n_sites)
        counts.append(len(classify_spectrum(spec, special_band_arcs(params, 0.0)).flat))
    assert 0 < counts[0] < counts[1]


@pytest.mark.parametrize("p", [0.3, 0.55, 1.2])
@pytest.mark.parametrize("chi", SWEEP_COUPLINGS)
def test_bound_states_match_the_ring(params, chi, p):
    spec = diagonalize_ring(params, chi, p, 129)
    classes = classify_spectrum(spec, band_arcs(params, p))
    assert classes.ambiguous == []
    assert len(classes.isolated) == 1

    bound = find_bound_state(params, chi, p)
    assert isinstance(bound, BoundState)
    index = classes.isolated[0]
    assert angular_distance(spec.eigenphases[index], bound.eigenphase.angle) < 1e-6
    assert localization_length(spec, index) == pytest.approx(bound.k_imag, rel=0.01)


def test_isolated_eigenphase_is_converged_in_ring_size(params, bound_ring):
    phases = []
    for spec in (diagonalize_ring(params, math.pi / 2, 0.55, 65), bound_ring[1]):
        classes = classify_spectrum(spec, band_arcs(params, 0.55))
        assert len(classes.isolated) == 1
        phases.append(float(spec.eigenphases[classes.isolated[0]]))
    assert angular_distance(*phases) < 1e-8


def test_interaction_keeps_band_eigenphases_within_a_level_spacing(params, bound_ring):
    arcs = band_arcs(params, 0.55)
    free = diagonalize_ring(params, 0.0, 0.55, 129)
    _, spec = bound_ring
    offset = band_set_distance(
        in_band_phases(free, classify_spectrum(free, arcs)),
        in_band_phases(spec, classify_spectrum(spec, arcs)),
    )
    assert offset <= 4 * math.pi / 129


def test_band_set_distance_is_two_sided_and_wraps():
    assert band_set_distance(np.array([0.0, 1.0]), np.array([0.0])) == pytest.approx(1.0)
    assert band_set_distance(np.array([0.0]), np.array([0.0, 1.0])) == pytest.approx(1.0)
    assert band_set_distance(np.array([3.1]), np.array([-3.1])) == pytest.approx(2 * math.pi - 6.2)
    assert band_set_distance(np.array([]), np.array([])) == 0.0
    assert band_set_distance(np.array([]), np.array([0.5])) == math.inf


def test_localization_fit_needs_decaying_sites(bound_ring):
    _, spec = bound_ring
    flat = spec.model_copy(update={"eigenvectors": np.zeros_like(spec.eigenvectors)})
    flat.eigenvectors[(spec.n_sites - 1) // 2 * 4, 0] = 1.0
    with pytest.raises(RangeError):
        localization_length(flat, 0)
