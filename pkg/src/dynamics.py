"""
########################################################################
# Thirring Automaton Spectral Toolkit - dynamics.py
#
# Origin: Created as part of the Thirring Automaton Spectral Toolkit
# Request: Two-particle spectral theory of the Thirring cellular automaton
# Version: 1.0.0
# Created: 2025-04-27
#
# Data Structure Diagram:
# - Blocks: Dict[p, RelativeState on a ring]; U2 is block diagonal in p
# - prepare_packet:       Gaussian in (p, y) times v^{++}_{p,k0}, antisymmetrized
# - prepare_bound_packet: Gaussian in p times the bound state of each block
# - evolve:               repeated apply_U2 -> List[EvolutionRecord]
# - bound_weight:         sum_p |<phi_p | block_p>|^2
# - ballistic_exponent:   log-log slope of <y^2>(t) - <y^2>(0)
#
# Dependencies:
# - numpy
# - src.two_particle
# - src.spectral
########################################################################
"""
import logging
import math
from typing import Dict, List, Optional, Sequence

import numpy as np

from src.config import settings
from src.errors import ContractViolation, LightConeError, RangeError
from src.models import BranchSign, DegenerateState, EvolutionRecord, RelativeState, WalkParams, WavepacketSpec
from src.phase_math import wrap_angle
from src.spectral import (
    bound_wavefunction,
    degenerate_wavefunction,
    find_bound_state,
    minimum_half_width,
    special_momentum_index,
)
from src.two_particle import check_ring_size, antisymmetrize, apply_U2, empty_ring, tensor_eigenvector

# Configure logging
logger = logging.getLogger(__name__)

Blocks = Dict[float, RelativeState]

TAIL_CUTOFF = 1e-16


def default_p_grid(count: Optional[int] = None) -> List[float]:
    """Uniform midpoint grid on (-pi, pi]; it never meets the special momenta z*pi/2."""
    count = count or settings.default_p_points
    grid = [-math.pi + (j + 0.5) * 2.0 * math.pi / count for j in range(count)]
    return [p for p in grid if special_momentum_index(p) is None]


def _compact(amplitudes: np.ndarray) -> float:
    """Zero rows below TAIL_CUTOFF of the peak in place; returns the discarded mass."""
    row_norms = np.linalg.norm(amplitudes, axis=1)
    tails = row_norms < TAIL_CUTOFF * np.max(row_norms)
    discarded = float(np.sum(row_norms[tails] ** 2))
    amplitudes[tails] = 0.0
    return discarded


def support_radius(blocks: Blocks) -> int:
    """Largest |y| carrying a nonzero amplitude in any block."""
    radius = 0
    for state in blocks.values():
        occupied = np.flatnonzero(np.any(state.amplitudes != 0, axis=1))
        if occupied.size:
            radius = max(radius, int(np.max(np.abs(state.y_values[occupied]))))
    return radius


def _normalize_blocks(blocks: Blocks) -> Blocks:
    total = math.sqrt(sum(state.norm() ** 2 for state in blocks.values()))
    if total == 0:
        raise ContractViolation("Packet has zero norm")
    return {p: state.with_amplitudes(state.amplitudes / total) for p, state in blocks.items()}


def prepare_packet(params: WalkParams, spec: WavepacketSpec, p_grid: Sequence[float], n_sites: int) -> Blocks:
    """
    Antisymmetric Gaussian packet, block p carrying weight e^{-(p - p0)^2 / (4 sigma_p^2)}
    and profile e^{-(y - y0)^2 sigma_k^2} e^{-i k0 y} v^{++}_{p,k0}; total norm 1.
    """
    check_ring_size(n_sites)
    half = (n_sites - 1) // 2
    if any(not -math.pi < p <= math.pi for p in p_grid):
        raise ContractViolation("Momentum grid must lie in (-pi, pi]")

    center = spec.center
    ys = np.arange(-half, half + 1)
    envelope = np.exp(-((ys - spec.y0) ** 2) * spec.sigma_k**2) * np.exp(-1j * center.k_real * ys)
    # mass of the Gaussian on the infinite line against what the ring holds
    full_mass = math.sqrt(math.pi / 2.0) / spec.sigma_k
    defect = max(0.0, 1.0 - float(np.sum(np.abs(envelope) ** 2)) / full_mass)

    blocks: Blocks = {}
    for p in p_grid:
        # distance to the centre measured around the zone
        weight = math.exp(-(wrap_angle(p - center.p) ** 2) / (4.0 * spec.sigma_p**2))
        spinor = tensor_eigenvector(params, BranchSign.PLUS, BranchSign.PLUS, p, center.k_real)
        amplitudes = weight * envelope[:, None] * spinor[None, :]
        amplitudes = antisymmetrize(empty_ring(n_sites).with_amplitudes(amplitudes)).amplitudes.copy()
        _compact(amplitudes)
        blocks[p] = RelativeState(y_min=-half, amplitudes=amplitudes, periodic=True)

    if defect > 1e-12:
        logger.warning(f"Packet truncated by the ring of N={n_sites}: mass defect {defect:.3e}")
    logger.info(f"Prepared packet on {len(blocks)} momentum blocks, N={n_sites}, y0={spec.y0}")
    return _normalize_blocks(blocks)


def _bound_vector(params: WalkParams, chi: float, p: float, n_sites: int) -> Optional[RelativeState]:
    """Bound or f_inf state of block p on the ring, None if the block has none."""
    if special_momentum_index(p) is not None:
        logger.debug(f"Skipping special momentum p={p} in the bound projector")
        return None
    half = (n_sites - 1) // 2
    found = find_bound_state(params, chi, p)
    if found is None:
        return None
    if isinstance(found, DegenerateState):
        state = degenerate_wavefunction(params, p, found.sign, half)
        return RelativeState(y_min=-half, amplitudes=state.amplitudes, periodic=True)

    width = max(half, minimum_half_width(found))
    if width > half:
        logger.warning(f"Bound state at p={p} (k_I={found.k_imag:.4g}) is truncated by the ring of N={n_sites}")
    state = bound_wavefunction(params, chi, p, found, width)
    core = state.amplitudes[width - half : width + half + 1]
    core = core / np.linalg.norm(core)
    return RelativeState(y_min=-half, amplitudes=core, periodic=True)


def bound_projectors(params: WalkParams, chi: float, blocks: Blocks) -> Dict[float, Optional[RelativeState]]:
    """Normalized discrete eigenvector of every block (None where absent)."""
    return {p: _bound_vector(params, chi, p, state.n_sites) for p, state in blocks.items()}


def _weight(projectors: Dict[float, Optional[RelativeState]], blocks: Blocks) -> float:
    total = 0.0
    for p, state in blocks.items():
        phi = projectors.get(p)
        if phi is not None:
            total += abs(phi.vdot(state)) ** 2
    return total


def bound_weight(params: WalkParams, chi: float, blocks: Blocks) -> float:
    """sum_p |<phi_p | block_p>|^2 over the generic momenta of the grid."""
    return _weight(bound_projectors(params, chi, blocks), blocks)


def prepare_bound_packet(
    params: WalkParams, chi: float, p_grid: Sequence[float], n_sites: int, p0: float, sigma_p: float
) -> Blocks:
    """Packet built from the bound states of the blocks, tails below 1e-16 removed."""
    blocks: Blocks = {}
    for p in p_grid:
        phi = _bound_vector(params, chi, p, n_sites)
        if phi is None:
            continue
        weight = math.exp(-(wrap_angle(p - p0) ** 2) / (4.0 * sigma_p**2))
        amplitudes = weight * phi.amplitudes
        _compact(amplitudes)
        blocks[p] = phi.with_amplitudes(amplitudes)
    if not blocks:
        raise ContractViolation(f"No block of the grid carries a bound state at chi={chi}")
    return _normalize_blocks(blocks)


def _record(step: int, blocks: Blocks, weight: Optional[float]) -> EvolutionRecord:
    first = next(iter(blocks.values()))
    probabilities = sum(np.sum(np.abs(state.amplitudes) ** 2, axis=1) for state in blocks.values())
    mass = float(np.sum(probabilities))
    ys = first.y_values.astype(float)
    return EvolutionRecord(
        step=step,
        y_distribution=[float(v) for v in probabilities],
        norm=math.sqrt(mass),
        second_moment=float(np.sum(ys**2 * probabilities) / mass),
        bound_weight=weight,
    )


def evolve(
    params: WalkParams,
    chi: float,
    blocks: Blocks,
    steps: int,
    track_bound_weight: bool = True,
) -> List[EvolutionRecord]:
    """
    Apply U2(chi, p) to every block `steps` times, recording after each step.

    Stops with LightConeError (carrying the records so far) once the support
    could reach the ring boundary.
    """
    if not blocks:
        raise ContractViolation("Nothing to evolve")
    n_sites = next(iter(blocks.values())).n_sites
    half = (n_sites - 1) // 2
    radius = support_radius(blocks)
    projectors = bound_projectors(params, chi, blocks) if track_bound_weight else {}

    def weight(current: Blocks) -> Optional[float]:
        return _weight(projectors, current) if track_bound_weight else None

    records = [_record(0, blocks, weight(blocks))]
    current = dict(blocks)
    for t in range(1, steps + 1):
        if radius + 2 * t > half:
            message = f"Light cone reached the ring boundary at step {t} (support {radius}, N={n_sites})"
            logger.warning(message)
            raise LightConeError(message, records)
        current = {p: apply_U2(params, chi, p, state) for p, state in current.items()}
        records.append(_record(t, current, weight(current)))
        logger.debug(f"Step {t}: norm={records[-1].norm:.15f}")
    logger.info(f"Evolved {len(blocks)} blocks for {steps} steps at chi={chi}")
    return records


def ballistic_exponent(records: Sequence[EvolutionRecord], start_fraction: float = 0.5) -> float:
    """Slope of log(<y^2>(t) - <y^2>(0)) against log t over the last part of the run."""
    base = records[0].second_moment
    points = [
        (math.log(r.step), math.log(r.second_moment - base))
        for r in records
        if r.step >= max(1, start_fraction * records[-1].step) and r.second_moment > base
    ]
    if len(points) < 3:
        raise RangeError(f"Need at least 3 growing points for the spreading fit, got {len(points)}")
    x, y = np.array(points).T
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)
