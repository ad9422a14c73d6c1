"""
Tests for the two-particle automaton in the relative-coordinate picture.
"""
import numpy as np
import pytest

from src.errors import ContractViolation
from src.models import BranchSign, RelativeState
from src.two_particle import (
    EXCHANGE,
    antisymmetric_isometry,
    antisymmetrize,
    antisymmetry_defect,
    apply_U2,
    build_momentum_blocks,
    empty_ring,
    flatten,
    fourier_momentum_blocks,
    from_flat,
    omega_sr,
    symmetric_isometry,
    tensor_eigenvector,
    two_particle_matrix,
)


def _random_ring(n_sites: int, seed: int = 0) -> RelativeState:
    rng = np.random.default_rng(seed)
    amplitudes = rng.normal(size=(n_sites, 4)) + 1j * rng.normal(size=(n_sites, 4))
    return empty_ring(n_sites).with_amplitudes(amplitudes)


def test_exchange_is_the_swap():
    assert np.allclose(EXCHANGE @ EXCHANGE, np.eye(4))
    assert np.allclose(EXCHANGE @ np.array([0, 1, 0, 0]), [0, 0, 1, 0])
    assert np.allclose(EXCHANGE @ np.array([1, 0, 0, 0]), [1, 0, 0, 0])


@pytest.mark.parametrize("chi", [0.0, 0.7, -2.5])
def test_ring_matrix_is_unitary(params, chi):
    u = build_momentum_blocks(params, 0.55, 65, chi)
    assert np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) < 1e-12


@pytest.mark.parametrize("chi", [0.0, 0.9])
@pytest.mark.parametrize("p", [0.55, -1.3])
def test_position_and_momentum_constructions_agree(params, chi, p):
    direct = build_momentum_blocks(params, p, 33, chi)
    fourier = fourier_momentum_blocks(params, p, 33, chi)
    assert np.max(np.abs(direct - fourier)) < 1e-12


@pytest.mark.parametrize("s", list(BranchSign))
@pytest.mark.parametrize("r", list(BranchSign))
def test_tensor_eigenvectors(params, s, r):
    p, k = 0.55, 0.8
    v = tensor_eigenvector(params, s, r, p, k)
    phase = np.exp(-1j * omega_sr(params, p, k, s, r))
    assert np.allclose(two_particle_matrix(params, p, k) @ v, phase * v, atol=1e-13)


def test_apply_U2_preserves_norm(params):
    state = _random_ring(41)
    image = apply_U2(params, 1.1, 0.55, state)
    assert image.norm() == pytest.approx(state.norm(), rel=1e-13)


def test_apply_U2_matches_the_dense_block(params):
    state = _random_ring(21, seed=3)
    image = apply_U2(params, -0.4, 1.2, state)
    dense = build_momentum_blocks(params, 1.2, 21, -0.4)
    assert np.allclose(flatten(image), dense @ flatten(state), atol=1e-13)


def test_fermionic_sector_is_invariant(params):
    state = antisymmetrize(_random_ring(31, seed=5))
    assert antisymmetry_defect(state) < 1e-15
    image = state
    for _ in range(5):
        image = apply_U2(params, 2.0, 0.3, image)
    assert antisymmetry_defect(image) < 1e-12


def test_one_step_moves_at_most_two_sites(params):
    state = empty_ring(21)
    amplitudes = state.amplitudes.copy()
    amplitudes[10] = [0.3, 0.5, -0.5, 0.1]
    image = apply_U2(params, 0.8, 0.55, state.with_amplitudes(amplitudes))
    occupied = np.flatnonzero(np.any(image.amplitudes != 0, axis=1))
    assert set(image.y_values[occupied]) <= {-2, -1, 0, 1, 2}


def test_interaction_only_acts_at_the_origin(params):
    state = empty_ring(21)
    amplitudes = state.amplitudes.copy()
    amplitudes[15] = [0.2, 0.4, 0.1j, 0.3]
    state = state.with_amplitudes(amplitudes)
    free = apply_U2(params, 0.0, 0.55, state)
    interacting = apply_U2(params, 1.7, 0.55, state)
    assert np.array_equal(free.amplitudes, interacting.amplitudes)


@pytest.mark.parametrize("n_sites", [5, 17])
def test_sector_isometries_split_the_space(n_sites):
    anti = antisymmetric_isometry(n_sites)
    sym = symmetric_isometry(n_sites)
    assert anti.shape == (4 * n_sites, 2 * n_sites - 1)
    assert sym.shape == (4 * n_sites, 2 * n_sites + 1)
    assert np.allclose(anti.conj().T @ anti, np.eye(anti.shape[1]))
    assert np.allclose(sym.conj().T @ sym, np.eye(sym.shape[1]))
    assert np.allclose(anti @ anti.conj().T + sym @ sym.conj().T, np.eye(4 * n_sites))


def test_antisymmetric_columns_are_fermionic():
    anti = antisymmetric_isometry(9)
    for column in anti.T:
        assert antisymmetry_defect(from_flat(column, 9)) < 1e-15


def test_apply_U2_rejects_windows(params):
    window = RelativeState(y_min=-3, amplitudes=np.zeros((7, 4), dtype=complex), periodic=False)
    with pytest.raises(ContractViolation):
        apply_U2(params, 0.0, 0.55, window)


@pytest.mark.parametrize("n_sites", [4, 3, 10])
def test_ring_size_must_be_odd_and_large_enough(n_sites):
    with pytest.raises(ContractViolation):
        empty_ring(n_sites)
