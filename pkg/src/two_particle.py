"""
########################################################################
# Thirring Automaton Spectral Toolkit - two_particle.py
#
# Origin: Created as part of the Thirring Automaton Spectral Toolkit
# Request: Two-particle spectral theory of the Thirring cellular automaton
# Version: 1.0.0
# Created: 2025-04-27
#
# Data Structure Diagram:
# - Internal order (up-up, up-down, down-up, down-down), particle 1 first
# - Ring layout: odd N, h = (N - 1) / 2, row index y + h,
#   flat index 4 * (y + h) + a
# - apply_U2:  phase e^{i chi} on up-down / down-up at y = 0, then the
#              4x4 block of shifts T_y, T_y^2 and phases e^{+-ip}
# - build_momentum_blocks: dense 4N x 4N U2(chi, p) from apply_U2
# - fourier_momentum_blocks: the same matrix from W(p+k) (x) W(p-k)
# - antisymmetric_isometry / symmetric_isometry: exchange sectors
#
# Dependencies:
# - numpy
# - scipy.linalg
# - src.walk
########################################################################
"""
import logging
from typing import Optional

import numpy as np
from scipy.linalg import block_diag

from src.errors import ContractViolation
from src.models import BranchSign, RelativeState, WalkParams
from src.phase_math import ComplexLike
from src.walk import dispersion, eigenvector, walk_matrix

# Configure logging
logger = logging.getLogger(__name__)

SPIN_PARITY = np.diag([1.0, -1.0, -1.0, 1.0]).astype(complex)
SINGLET = np.array([0.0, 1.0, -1.0, 0.0], dtype=complex) / np.sqrt(2.0)


def omega_sr(params: WalkParams, p: float, k: ComplexLike, s: BranchSign, r: BranchSign) -> ComplexLike:
    """omega_sr(p, k) = s omega(p + k) + r omega(p - k)."""
    k_arr = np.asarray(k, dtype=complex)
    total = s.sign * np.asarray(dispersion(params, p + k_arr)) + r.sign * np.asarray(dispersion(params, p - k_arr))
    return complex(total) if np.ndim(k) == 0 else total


def tensor_eigenvector(params: WalkParams, s: BranchSign, r: BranchSign, p: float, k: complex) -> np.ndarray:
    """v^{sr}_{p,k} = v^s_{p+k} (x) v^r_{p-k}."""
    return np.kron(eigenvector(params, s, p + k), eigenvector(params, r, p - k))


def two_particle_matrix(params: WalkParams, p: float, k: complex) -> np.ndarray:
    """Free two-particle block W(p + k) (x) W(p - k)."""
    return np.kron(walk_matrix(params, p + k), walk_matrix(params, p - k))


def exchange_matrix() -> np.ndarray:
    """E = (1/2) sum_i sigma_i (x) sigma_i, the SWAP of the two internal indices."""
    paulis = [
        np.eye(2, dtype=complex),
        np.array([[0, 1], [1, 0]], dtype=complex),
        np.array([[0, -1j], [1j, 0]], dtype=complex),
        np.array([[1, 0], [0, -1]], dtype=complex),
    ]
    return 0.5 * sum(np.kron(sigma, sigma) for sigma in paulis)


EXCHANGE = exchange_matrix()


def _reflected(state: RelativeState) -> np.ndarray:
    """Rows of E f(-y) in the layout of f (window must be symmetric)."""
    if not state.is_symmetric:
        raise ContractViolation(
            f"Window [{state.y_min}, {state.y_max}] is not symmetric about y = 0"
        )
    return state.amplitudes[::-1] @ EXCHANGE.T


def antisymmetry_defect(state: RelativeState) -> float:
    """max_y ||f(y) + E f(-y)||; zero iff the state is Fermionic."""
    defect = state.amplitudes + _reflected(state)
    return float(np.max(np.linalg.norm(defect, axis=1)))


def antisymmetrize(state: RelativeState) -> RelativeState:
    """Projection (f(y) - E f(-y)) / 2 onto the Fermionic sector."""
    return state.with_amplitudes(0.5 * (state.amplitudes - _reflected(state)))


def empty_ring(n_sites: int) -> RelativeState:
    """Zero state on a ring of odd size n_sites centred at y = 0."""
    check_ring_size(n_sites)
    half = (n_sites - 1) // 2
    return RelativeState(y_min=-half, amplitudes=np.zeros((n_sites, 4), dtype=complex), periodic=True)


def as_ring(state: RelativeState) -> RelativeState:
    """Reinterpret a symmetric odd window as a ring of the same size."""
    if not state.is_symmetric:
        raise ContractViolation("Only windows symmetric about y = 0 can be closed into a ring")
    check_ring_size(state.n_sites)
    return RelativeState(y_min=state.y_min, amplitudes=state.amplitudes, periodic=True)


def check_ring_size(n_sites: int) -> None:
    if n_sites < 5 or n_sites % 2 == 0:
        raise ContractViolation(f"Ring size must be odd and at least 5, got {n_sites}")


def _step(params: WalkParams, chi: float, p: float, amps: np.ndarray) -> np.ndarray:
    """U2(chi, p) on arrays of shape (N, 4, ...) in ring layout."""
    n_sites = amps.shape[0]
    half = (n_sites - 1) // 2
    g = amps.copy()
    if chi != 0.0:
        g[half, 1:3] *= np.exp(1j * chi)

    mu, nu = params.mu, params.nu
    hop = -1j * mu * nu
    ep = np.exp(1j * p)
    g0, g1, g2, g3 = g[:, 0], g[:, 1], g[:, 2], g[:, 3]

    def shift(a: np.ndarray, n: int) -> np.ndarray:
        # (T^n a)(y) = a(y - n)
        return np.roll(a, n, axis=0)

    out = np.empty_like(g)
    out[:, 0] = nu * nu * ep * ep * g0 + hop * ep * (shift(g1, 1) + shift(g2, -1)) - mu * mu * g3
    out[:, 1] = hop * ep * shift(g0, 1) + nu * nu * shift(g1, 2) - mu * mu * g2 + hop / ep * shift(g3, 1)
    out[:, 2] = hop * ep * shift(g0, -1) - mu * mu * g1 + nu * nu * shift(g2, -2) + hop / ep * shift(g3, -1)
    out[:, 3] = -mu * mu * g0 + hop / ep * (shift(g1, 1) + shift(g2, -1)) + nu * nu / (ep * ep) * g3
    return out


def apply_U2(params: WalkParams, chi: float, p: float, state: RelativeState) -> RelativeState:
    """
    One automaton step U2 = W2 V2(chi) on a ring state.

    The interaction phase acts first and only on the up-down and down-up
    components at y = 0.
    """
    if not state.periodic:
        raise ContractViolation("apply_U2 requires a ring state; close windows with as_ring()")
    check_ring_size(state.n_sites)
    if not state.is_symmetric:
        raise ContractViolation("Ring must be centred at y = 0")
    return state.with_amplitudes(_step(params, chi, p, state.amplitudes))


def build_momentum_blocks(params: WalkParams, p: float, n_sites: int, chi: float = 0.0) -> np.ndarray:
    """Dense 4N x 4N matrix of U2(chi, p) whose columns are step images of basis states."""
    check_ring_size(n_sites)
    dim = 4 * n_sites
    basis = np.eye(dim, dtype=complex).reshape(n_sites, 4, dim)
    matrix = _step(params, chi, p, basis).reshape(dim, dim)
    logger.debug(f"Built U2 block for N={n_sites}, p={p}, chi={chi}")
    return matrix


def ring_momenta(n_sites: int) -> np.ndarray:
    """Relative momenta k_m = 2 pi m / N, m = -h..h, resolved by the ring."""
    half = (n_sites - 1) // 2
    return 2.0 * np.pi * np.arange(-half, half + 1) / n_sites


def fourier_momentum_blocks(params: WalkParams, p: float, n_sites: int, chi: float = 0.0) -> np.ndarray:
    """
    U2(chi, p) assembled from W(p + k_m) (x) W(p - k_m) on the plane waves
    e^{-i k_m y} / sqrt(N), followed by the interaction phase.
    """
    check_ring_size(n_sites)
    half = (n_sites - 1) // 2
    ys = np.arange(-half, half + 1)
    momenta = ring_momenta(n_sites)
    fourier = np.exp(-1j * np.outer(ys, momenta)) / np.sqrt(n_sites)
    lift = np.kron(fourier, np.eye(4))
    free = block_diag(*[two_particle_matrix(params, p, k) for k in momenta])
    interaction = np.ones(4 * n_sites, dtype=complex)
    interaction[4 * half + 1 : 4 * half + 3] = np.exp(1j * chi)
    return (lift @ free @ lift.conj().T) * interaction[None, :]


def _sector_isometry(n_sites: int, sign: float, origin: np.ndarray) -> np.ndarray:
    half = (n_sites - 1) // 2
    columns = []
    for vec in origin:
        col = np.zeros(4 * n_sites, dtype=complex)
        col[4 * half : 4 * half + 4] = vec
        columns.append(col)
    for y in range(1, half + 1):
        for a in range(4):
            col = np.zeros(4 * n_sites, dtype=complex)
            col[4 * (y + half) + a] = 1.0 / np.sqrt(2.0)
            col[4 * (half - y) : 4 * (half - y) + 4] = sign * EXCHANGE[:, a] / np.sqrt(2.0)
            columns.append(col)
    return np.stack(columns, axis=1)


def antisymmetric_isometry(n_sites: int) -> np.ndarray:
    """Orthonormal basis (4N x (2N - 1)) of states with f(y) = -E f(-y)."""
    check_ring_size(n_sites)
    return _sector_isometry(n_sites, -1.0, SINGLET[None, :])


def symmetric_isometry(n_sites: int) -> np.ndarray:
    """Orthonormal basis (4N x (2N + 1)) of states with f(y) = E f(-y)."""
    check_ring_size(n_sites)
    origin = np.array(
        [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 1.0 / np.sqrt(2.0), 1.0 / np.sqrt(2.0), 0.0],
        ],
        dtype=complex,
    )
    return _sector_isometry(n_sites, 1.0, origin)


def flatten(state: RelativeState) -> np.ndarray:
    """Site-major flat vector of a ring state."""
    return state.amplitudes.reshape(-1)


def from_flat(vector: np.ndarray, n_sites: Optional[int] = None) -> RelativeState:
    """Ring state from a site-major flat vector."""
    n_sites = n_sites or vector.shape[0] // 4
    half = (n_sites - 1) // 2
    return RelativeState(y_min=-half, amplitudes=np.asarray(vector).reshape(n_sites, 4), periodic=True)
