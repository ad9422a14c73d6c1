"""
########################################################################
# Thirring Automaton Spectral Toolkit - oracle.py
#
# Origin: Created as part of the Thirring Automaton Spectral Toolkit
# Request: Two-particle spectral theory of the Thirring cellular automaton
# Version: 1.0.0
# Created: 2025-04-27
#
# Data Structure Diagram:
# - diagonalize_ring:   U2 (4N x 4N) -> per exchange sector Q^H U Q
#                       -> complex Schur form -> RingSpectrum
# - classify_spectrum:  antisymmetric eigenphases -> flat / in_band /
#                       isolated / ambiguous against a BandSet
# - localization_length: log ||f(y)|| = a + b (-1)^y + kappa |y|
# - band_set_distance: two-sided nearest-phase distance of in-band sets
# - residual:           ||U2 f - e^{-i omega} f|| on the interior
#
# Dependencies:
# - numpy
# - scipy.linalg
# - src.two_particle
########################################################################
"""
import logging
from typing import Dict, Optional

import numpy as np
from scipy.linalg import schur

from src.config import settings
from src.errors import ContractViolation, OracleError, RangeError
from src.models import BranchSign, BandSet, RelativeState, RingSpectrum, SpectrumClassification, UnitPhase, WalkParams
from src.phase_math import angular_distance, arc_distance, wrap_angle
from src.two_particle import (
    antisymmetric_isometry,
    apply_U2,
    as_ring,
    build_momentum_blocks,
    omega_sr,
    ring_momenta,
    symmetric_isometry,
)

# Configure logging
logger = logging.getLogger(__name__)

MAX_RING_SIZE = 1025
RESIDUAL_TOLERANCE = 1e-10
CONTINUOUS_BANDS = ("++f", "+-f")


def _check_size(n_sites: int) -> None:
    if n_sites % 2 == 0 or not 5 <= n_sites <= MAX_RING_SIZE:
        raise ContractViolation(f"Ring size must be odd with 5 <= N <= {MAX_RING_SIZE}, got {n_sites}")


def _diagonalize_sector(unitary: np.ndarray, isometry: np.ndarray, label: str) -> Dict[str, np.ndarray]:
    reduced = isometry.conj().T @ unitary @ isometry
    triangular, vectors = schur(reduced, output="complex")
    eigenvalues = np.diag(triangular)
    off_diagonal = float(np.linalg.norm(np.triu(triangular, 1)))
    full = isometry @ vectors

    residuals = np.linalg.norm(unitary @ full - full * eigenvalues[None, :], axis=0)
    gram = full.conj().T @ full
    orthonormality = float(np.max(np.abs(gram - np.eye(gram.shape[0]))))
    report = {
        "sector": label,
        "dimension": int(isometry.shape[1]),
        "max_residual": float(np.max(residuals)),
        "orthonormality_defect": orthonormality,
        "schur_off_diagonal": off_diagonal,
        "min_modulus": float(np.min(np.abs(eigenvalues))),
    }
    logger.debug(f"Sector {label}: {report}")
    if report["max_residual"] > RESIDUAL_TOLERANCE or orthonormality > RESIDUAL_TOLERANCE:
        raise OracleError("Eigendecomposition failed its residual or orthonormality check", report)
    return {"values": eigenvalues, "vectors": full}


def diagonalize_ring(params: WalkParams, chi: float, p: float, n_sites: int) -> RingSpectrum:
    """Full eigendecomposition of U2(chi, p) on a ring, sector by sector."""
    _check_size(n_sites)
    unitary = build_momentum_blocks(params, p, n_sites, chi)
    defect = float(np.max(np.abs(unitary.conj().T @ unitary - np.eye(4 * n_sites))))
    if defect > 1e-12:
        raise OracleError("U2 is not unitary", {"unitarity_defect": defect, "n_sites": n_sites})

    anti = _diagonalize_sector(unitary, antisymmetric_isometry(n_sites), "antisymmetric")
    sym = _diagonalize_sector(unitary, symmetric_isometry(n_sites), "symmetric")

    values = np.concatenate([anti["values"], sym["values"]])
    vectors = np.hstack([anti["vectors"], sym["vectors"]])
    tags = np.concatenate([np.ones(anti["values"].size, dtype=bool), np.zeros(sym["values"].size, dtype=bool)])
    logger.info(f"Diagonalized U2 on N={n_sites} at mu={params.mu}, chi={chi}, p={p}")
    return RingSpectrum(
        mu=params.mu,
        chi=chi,
        p=p,
        n_sites=n_sites,
        eigenphases=np.angle(values),
        eigenvectors=vectors,
        antisymmetric=tags,
    )


def free_ring_eigenphases(params: WalkParams, p: float, n_sites: int) -> np.ndarray:
    """Angles of e^{-i omega_sr(p, k_m)} over the ring momenta and all four branch pairs."""
    momenta = ring_momenta(n_sites)
    angles = []
    for s in BranchSign:
        for r in BranchSign:
            angles.append(-np.real(omega_sr(params, p, momenta, s, r)))
    return np.angle(np.exp(1j * np.concatenate(angles)))


def completeness_defect(spec: RingSpectrum) -> float:
    """||V V^H - P|| for the antisymmetric eigenvectors and the sector projector P."""
    vectors = spec.eigenvectors[:, spec.antisymmetric]
    isometry = antisymmetric_isometry(spec.n_sites)
    return float(np.max(np.abs(vectors @ vectors.conj().T - isometry @ isometry.conj().T)))


def classify_spectrum(
    spec: RingSpectrum,
    bands: BandSet,
    delta_band: Optional[float] = None,
    g_min: Optional[float] = None,
) -> SpectrumClassification:
    """
    Split the antisymmetric eigenphases into flat, in-band and isolated sets.

    Eigenphases closer than g_min to the continuous bands but not within
    delta_band are reported as ambiguous rather than forced into a class.
    """
    delta_band = settings.band_tolerance(spec.n_sites) if delta_band is None else delta_band
    g_min = settings.gap_factor * delta_band if g_min is None else g_min
    result = SpectrumClassification(delta_band=delta_band, g_min=g_min)
    continuous = [bands.arcs[key] for key in CONTINUOUS_BANDS if key in bands.arcs]
    separated = g_min > delta_band > 0

    for index in spec.antisymmetric_indices:
        phase = UnitPhase(angle=float(spec.eigenphases[index]))
        flat = bands.flat_eigenphase
        if flat is not None and angular_distance(phase.angle, flat.angle) < max(delta_band, 1e-10):
            result.flat.append(index)
            continue
        distance = min(arc_distance(arc, phase) for arc in continuous)
        if distance < delta_band:
            result.in_band.append(index)
        elif separated and distance >= g_min:
            result.isolated.append(index)
        else:
            result.ambiguous.append(index)

    if result.ambiguous:
        logger.warning(
            f"Ambiguous classification of {len(result.ambiguous)} eigenphases at p={spec.p}, chi={spec.chi} "
            f"(delta_band={delta_band:.3e}, g_min={g_min:.3e}): {result.ambiguous}"
        )
    return result


def in_band_phases(spec: RingSpectrum, classes: SpectrumClassification) -> np.ndarray:
    return spec.eigenphases[classes.in_band]


def band_set_distance(first: np.ndarray, second: np.ndarray) -> float:
    """
    Largest distance on the circle from a phase of either set to the
    nearest phase of the other. Two empty sets are at distance 0.
    """
    first, second = np.asarray(first, dtype=float), np.asarray(second, dtype=float)
    if first.size == 0 or second.size == 0:
        return 0.0 if first.size == second.size else float("inf")
    gaps = np.abs(wrap_angle(first[:, None] - second[None, :]))
    return float(max(np.max(np.min(gaps, axis=1)), np.max(np.min(gaps, axis=0))))


def eigenvector_state(spec: RingSpectrum, index: int) -> RelativeState:
    """Eigenvector column as a ring state."""
    half = (spec.n_sites - 1) // 2
    amplitudes = spec.eigenvectors[:, index].reshape(spec.n_sites, 4)
    return RelativeState(y_min=-half, amplitudes=amplitudes, periodic=True)


def localization_length(spec: RingSpectrum, index: int) -> float:
    """
    Decay rate kappa < 0 of ||f(y)|| ~ e^{kappa |y|} fitted on 1 <= y <= h/2.

    The amplitude alternates with the parity of y, so the fit carries a
    (-1)^y term next to the slope.
    """
    half = (spec.n_sites - 1) // 2
    norms = np.linalg.norm(spec.eigenvectors[:, index].reshape(spec.n_sites, 4), axis=1)
    ys = np.arange(1, half // 2 + 1)
    amplitude = norms[half + ys]
    keep = amplitude > 1e-12 * np.max(norms)
    if np.count_nonzero(keep) < 4:
        raise RangeError(
            f"Only {int(np.count_nonzero(keep))} sites above the 1e-12 floor for eigenvector {index}; need 4"
        )
    ys = ys[keep]
    design = np.column_stack([np.ones(ys.size), (-1.0) ** ys, ys.astype(float)])
    coefficients, *_ = np.linalg.lstsq(design, np.log(amplitude[keep]), rcond=None)
    return float(coefficients[2])


def residual(params: WalkParams, chi: float, p: float, state: RelativeState, eigenphase: UnitPhase) -> float:
    """||U2 f - e^{-i omega} f||, restricted to |y| <= h - 2 for window states."""
    ring = state if state.periodic else as_ring(state)
    image = apply_U2(params, chi, p, ring).amplitudes
    difference = image - eigenphase.point * ring.amplitudes
    if not state.periodic:
        difference = difference[2:-2]
    return float(np.linalg.norm(difference))
