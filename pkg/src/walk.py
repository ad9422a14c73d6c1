"""
########################################################################
# Thirring Automaton Spectral Toolkit - walk.py
#
# Origin: Created as part of the Thirring Automaton Spectral Toolkit
# Request: Two-particle spectral theory of the Thirring cellular automaton
# Version: 1.0.0
# Created: 2025-04-27
#
# Data Structure Diagram:
# - walk_matrix(params, p)            -> 2x2 W(p)
# - dispersion(params, p)             -> omega(p) = Arccos(nu cos p)
# - g_pair / g_branch(params, s, p)   -> g_s(p)
# - eigenvector(params, s, p)         -> Spinor2 v^s_p
# - asymptotic_eigenvalues(...)       -> large |Im k| eigenvalues of W(p - k)
#
# Dependencies:
# - numpy
# - src.phase_math
# - src.models
########################################################################
"""
import logging
from typing import Tuple

import numpy as np

from src.models import BranchSign, WalkParams
from src.phase_math import ComplexLike, arccos_principal, wrap_angle

# Configure logging
logger = logging.getLogger(__name__)


def _scalar_or_array(value: np.ndarray, like: ComplexLike) -> ComplexLike:
    return complex(value) if np.ndim(like) == 0 else value


def walk_matrix(params: WalkParams, p: complex) -> np.ndarray:
    """W(p) = ((nu e^{ip}, -i mu), (-i mu, nu e^{-ip}))."""
    phase = np.exp(1j * complex(p))
    return np.array(
        [
            [params.nu * phase, -1j * params.mu],
            [-1j * params.mu, params.nu / phase],
        ],
        dtype=complex,
    )


def dispersion(params: WalkParams, p: ComplexLike) -> ComplexLike:
    """omega(p) = Arccos(nu cos p); real in [0, pi] for real p."""
    return arccos_principal(params.nu * np.cos(np.asarray(p, dtype=complex)))


def g_pair(params: WalkParams, p: ComplexLike) -> Tuple[ComplexLike, ComplexLike]:
    """
    (g_+(p), g_-(p)) with g_s = -i(s sin omega + nu sin p).

    g_+ g_- = mu^2, so only the larger of the two is summed directly and the
    other is recovered from the product.
    """
    x = np.asarray(p, dtype=complex)
    omega = np.asarray(dispersion(params, x), dtype=complex)
    sin_omega = np.sin(omega)
    nu_sin = params.nu * np.sin(x)
    g_plus = -1j * (sin_omega + nu_sin)
    g_minus = -1j * (-sin_omega + nu_sin)
    mu2 = params.mu * params.mu
    plus_larger = np.abs(g_plus) >= np.abs(g_minus)
    with np.errstate(divide="ignore", invalid="ignore"):
        stable_plus = np.where(plus_larger, g_plus, mu2 / g_minus)
        stable_minus = np.where(plus_larger, mu2 / g_plus, g_minus)
    return _scalar_or_array(stable_plus, p), _scalar_or_array(stable_minus, p)


def g_branch(params: WalkParams, s: BranchSign, p: ComplexLike) -> ComplexLike:
    """g_s(p) = -i(s sin omega(p) + nu sin p)."""
    g_plus, g_minus = g_pair(params, p)
    return g_plus if s is BranchSign.PLUS else g_minus


def eigenvector(params: WalkParams, s: BranchSign, p: ComplexLike) -> np.ndarray:
    """
    v^s_p = (-i mu, g_s(p)) / |N_s| with |N_s|^2 = mu^2 + |g_s|^2.

    Satisfies W(p) v = e^{-i s omega(p)} v. Arrays of momenta give an array
    of shape (..., 2).
    """
    g = np.asarray(g_branch(params, s, p), dtype=complex)
    norm = np.sqrt(params.mu**2 + np.abs(g) ** 2)
    assert np.all(norm > 0), "eigenvector normalization vanished"
    vec = np.stack([np.broadcast_to(-1j * params.mu, g.shape), g], axis=-1)
    return vec / norm[..., None]


def eigenphase_factor(params: WalkParams, s: BranchSign, p: ComplexLike) -> ComplexLike:
    """Eigenvalue e^{-i s omega(p)} of W(p) on v^s_p."""
    omega = np.asarray(dispersion(params, p), dtype=complex)
    return _scalar_or_array(np.exp(-1j * s.sign * omega), p)


def asymptotic_eigenvalues(
    params: WalkParams,
    p: float,
    k_real: float,
    k_imag: float,
) -> Tuple[complex, complex, int]:
    """
    Leading large-|k_I| eigenvalues of W(p - k), k = k_R + i k_I, k_I < 0.

    Returns (lambda_1, lambda_2, index) where index (1 or 2) names the one
    equal to e^{-i omega(p - k)}: lambda_1 when p - k_R (wrapped) > 0, lambda_2 otherwise.
    lambda_1 grows like e^{-k_I}, lambda_2 decays like e^{k_I}.
    """
    nu, mu = params.nu, params.mu
    theta = wrap_angle(p - k_real)
    grow = np.exp(-k_imag)
    decay = np.exp(k_imag)
    lambda_1 = nu * np.exp(-1j * theta) * grow - (mu * mu / nu) * np.exp(1j * theta) * decay
    lambda_2 = np.exp(1j * theta) * decay / nu
    index = 1 if theta > 0 else 2
    logger.debug(f"Asymptotic eigenvalues at theta={theta}, k_I={k_imag}: branch {index}")
    return complex(lambda_1), complex(lambda_2), index
