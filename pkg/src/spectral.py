"""
########################################################################
# Thirring Automaton Spectral Toolkit - spectral.py
#
# Origin: Created as part of the Thirring Automaton Spectral Toolkit
# Request: Two-particle spectral theory of the Thirring cellular automaton
# Version: 1.0.0
# Created: 2025-04-27
#
# Data Structure Diagram:
# - Regions of complex relative momentum k on which omega_sr is real:
#     f  : k real                     (continuous bands)
#     z  : Re k = z*pi/2, Im k < 0    (habitat of the discrete band)
# - BandSet: six arcs ++f, +-f, ++0, ++2, +-(-1), +-(+1) plus e^{+-2ip}
# - Scattering states:  v1 = v^{+s}_k, v2 = Z v1, v3 = E v1, v4 = Z v3
#     free        [v1 + (-1)^y v2] e^{-iyk} - [v3 + (-1)^y v4] e^{iyk}
#     interacting [v1 - (-1)^y v2] e^{-iyk} - T [v3 - (-1)^y v4] e^{iyk}
#                 for y >= 1, singlet at y = 0, y < 0 by antisymmetry
# - Bound state: interacting state at complex k with T_s(k) = 0, i.e.
#     e^{i chi} = G_z(k_I) = -g_s(p - k) / g_+(p + k)
# - Degenerate states f_{+-inf} when e^{i chi} = e^{+-2ip}
# - Special momenta p = z*pi/2: one flat branch, stationary states
#
# Dependencies:
# - numpy
# - scipy.optimize
# - src.walk
# - src.two_particle
# - src.phase_math
########################################################################
"""
import logging
import math
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
from scipy.optimize import bisect

from src.config import settings
from src.errors import BoundStateError, ContractViolation, PoleError, SpecialMomentumError, ThirringError, WindowError
from src.models import (
    BOUND_REGIONS,
    BandSet,
    BoundState,
    BranchSign,
    CircleArc,
    DegeneracyPartner,
    DegenerateState,
    RegionLabel,
    RelativeState,
    ScatteringKind,
    SpectralSummary,
    UnitPhase,
    WalkParams,
)
from src.phase_math import angular_distance, arc_from_quasi_energies, wrap_angle
from src.two_particle import EXCHANGE, SPIN_PARITY, omega_sr, tensor_eigenvector
from src.walk import dispersion, g_branch

# Configure logging
logger = logging.getLogger(__name__)

PLUS = BranchSign.PLUS
MINUS = BranchSign.MINUS

BoundResult = Union[BoundState, DegenerateState, None]


# ---------------------------------------------------------------------------
# Special momenta
# ---------------------------------------------------------------------------

def special_momentum_index(p: float, guard: Optional[float] = None) -> Optional[int]:
    """z in {-1, 0, 1, 2} if p lies within guard of z*pi/2, else None."""
    guard = settings.special_momentum_guard if guard is None else guard
    p = wrap_angle(p)
    for z in (0, 1, -1, 2):
        if angular_distance(p, z * math.pi / 2) < guard:
            return z
    return None


def check_generic_momentum(p: float, guard: Optional[float] = None) -> None:
    guard = settings.special_momentum_guard if guard is None else guard
    if special_momentum_index(p, guard) is not None:
        raise SpecialMomentumError(p, guard)


# ---------------------------------------------------------------------------
# Bands
# ---------------------------------------------------------------------------

def _asymptotic_quasi_energy(p: float, region: RegionLabel) -> float:
    """Limit of the real quasi-energy along region z as k_I -> -inf."""
    if region is RegionLabel.ZERO:
        return 2.0 * abs(p)
    if region is RegionLabel.TWO:
        return 2.0 * math.pi - 2.0 * abs(p)
    shift = math.pi / 2 if region is RegionLabel.PLUS_ONE else -math.pi / 2
    return 2.0 * abs(wrap_angle(p + shift)) - math.pi


def band_arcs(params: WalkParams, p: float) -> BandSet:
    """
    The six arcs of the spectrum of U2(chi, p) for generic p.

    ++f and +-f are the closed continuous bands; the four region arcs are
    open and fill the gaps except for the points e^{+-2ip}.
    """
    check_generic_momentum(p)
    p = wrap_angle(p)

    two_omega = 2.0 * float(np.real(dispersion(params, p)))
    half_width = abs(2.0 * float(np.real(dispersion(params, p + math.pi / 2))) - math.pi)

    arcs: Dict[str, CircleArc] = {
        "++f": arc_from_quasi_energies(two_omega, 2.0 * math.pi - two_omega, True, True),
        "+-f": arc_from_quasi_energies(-half_width, half_width, True, True),
    }
    for region in BOUND_REGIONS:
        z = region.z
        edge = float(np.real(omega_sr(params, p, z * math.pi / 2, PLUS, region.branch)))
        arcs[_arc_key(region)] = arc_from_quasi_energies(
            edge, _asymptotic_quasi_energy(p, region), False, False
        )

    return BandSet(
        mu=params.mu,
        p=p,
        arcs=arcs,
        excluded=[UnitPhase(angle=2.0 * p), UnitPhase(angle=-2.0 * p)],
    )


def _arc_key(region: RegionLabel) -> str:
    if region.branch is PLUS:
        return f"++{region.value}"
    return f"+-({region.value})"


def _special_regions(z: int) -> Tuple[RegionLabel, RegionLabel]:
    if z in (0, 2):
        return RegionLabel.ZERO, RegionLabel.TWO
    return RegionLabel.PLUS_ONE, RegionLabel.MINUS_ONE


def special_decay_limit(params: WalkParams) -> float:
    """Largest |k_I| on which the quasi-energy stays real at p = z*pi/2."""
    return math.acosh(1.0 / params.nu)


def special_band_arcs(params: WalkParams, p: float) -> BandSet:
    """
    Spectrum picture at p = z*pi/2.

    p in {0, pi}: the +- branch is flat at 1 and the ++ band survives.
    p = +-pi/2: the ++ branch is flat at -1 and the +- band survives.
    """
    z = special_momentum_index(p)
    if z is None:
        raise ContractViolation(f"p={p} is not a special momentum")
    p = z * math.pi / 2
    limit = special_decay_limit(params) * (1.0 - 1e-12)

    arcs: Dict[str, CircleArc] = {}
    if z in (0, 2):
        two_omega = 2.0 * float(np.real(dispersion(params, p)))
        arcs["++f"] = arc_from_quasi_energies(
            min(two_omega, 2.0 * math.pi - two_omega), max(two_omega, 2.0 * math.pi - two_omega), True, True
        )
        flat = UnitPhase(angle=0.0)
    else:
        half_width = abs(2.0 * float(np.real(dispersion(params, p + math.pi / 2))) - math.pi)
        arcs["+-f"] = arc_from_quasi_energies(-half_width, half_width, True, True)
        flat = UnitPhase(angle=math.pi)

    for region in _special_regions(z):
        k_edge = region.z * math.pi / 2
        near = float(np.real(omega_sr(params, p, k_edge, PLUS, region.branch)))
        far = float(np.real(omega_sr(params, p, complex(k_edge, -limit), PLUS, region.branch)))
        arcs[_arc_key(region)] = arc_from_quasi_energies(near, far, False, False)

    return BandSet(mu=params.mu, p=p, arcs=arcs, excluded=[flat], flat_eigenphase=flat)


def bound_state_quasi_energy_curve(
    params: WalkParams, p: float, region: RegionLabel, k_imag: np.ndarray
) -> np.ndarray:
    """omega_{+s}(p, z*pi/2 + i k_I) along region z; its image is the region arc."""
    if region is RegionLabel.FREE:
        raise ContractViolation("The quasi-energy curve is defined on the bound-state regions only")
    k = region.z * math.pi / 2 + 1j * np.asarray(k_imag, dtype=float)
    return np.asarray(omega_sr(params, p, k, PLUS, region.branch))


# ---------------------------------------------------------------------------
# Momentum regions and degeneracy
# ---------------------------------------------------------------------------

def classify_momentum(
    params: WalkParams,
    p: float,
    k: complex,
    s: BranchSign,
    r: BranchSign,
    tol: float = 1e-10,
) -> Optional[RegionLabel]:
    """Region of k if omega_sr(p, k) is real, None otherwise."""
    check_generic_momentum(p)
    omega = omega_sr(params, p, k, s, r)
    if abs(omega.imag) > tol:
        return None
    if abs(k.imag) <= tol:
        return RegionLabel.FREE
    k_real = wrap_angle(k.real)
    for region in BOUND_REGIONS:
        if angular_distance(k_real, region.z * math.pi / 2) <= tol:
            return region
    logger.debug(f"Real quasi-energy at k={k} off the region grid")
    return None


def degeneracy_partners(s: BranchSign, r: BranchSign, k: complex) -> List[DegeneracyPartner]:
    """
    The four (s, r, k) triples with one eigenphase:
    (s, r, k), (r, s, -k), (-r, -s, pi - k), (-s, -r, k - pi).
    """
    k = complex(k)
    triples = [
        (s, r, k),
        (r, s, -k),
        (r.flip(), s.flip(), math.pi - k),
        (s.flip(), r.flip(), k - math.pi),
    ]
    return [
        DegeneracyPartner(s=a, r=b, k_real=wrap_angle(q.real), k_imag=q.imag)
        for a, b, q in triples
    ]


# ---------------------------------------------------------------------------
# Transmission and scattering states
# ---------------------------------------------------------------------------

def transmission(params: WalkParams, chi: float, p: float, k: complex, branch: BranchSign) -> complex:
    """T_s = (g_+(p+k) + e^{-i chi} g_s(p-k)) / (g_s(p-k) + e^{-i chi} g_+(p+k))."""
    phase = np.exp(-1j * chi)
    if phase == 1.0:
        return 1.0 + 0.0j
    g_plus = complex(g_branch(params, PLUS, p + k))
    g_s = complex(g_branch(params, branch, p - k))
    numerator = g_plus + phase * g_s
    denominator = g_s + phase * g_plus
    if abs(denominator) <= 1e-300:
        raise PoleError(f"Transmission pole at chi={chi}, p={p}, k={k}, branch={branch.value}")
    return complex(numerator / denominator)


def _internal_vectors(params: WalkParams, p: float, k: complex, branch: BranchSign) -> Tuple[np.ndarray, ...]:
    v1 = tensor_eigenvector(params, PLUS, branch, p, k)
    v3 = EXCHANGE @ v1
    return v1, SPIN_PARITY @ v1, v3, SPIN_PARITY @ v3


def _interacting_profile(
    params: WalkParams,
    chi: float,
    p: float,
    k: complex,
    branch: BranchSign,
    t_coeff: complex,
    half_width: int,
) -> np.ndarray:
    v1, v2, v3, v4 = _internal_vectors(params, p, k, branch)
    ys = np.arange(1, half_width + 1)
    parity = ((-1.0) ** ys)[:, None]
    incoming = np.exp(-1j * ys * k)[:, None]
    positive = (v1 - parity * v2) * incoming
    if t_coeff != 0:
        positive = positive - t_coeff * (v3 - parity * v4) * np.exp(1j * ys * k)[:, None]

    core = (v1 - v2) - t_coeff * (v3 - v4)
    eta = np.exp(-1j * chi) * core[1]
    origin = np.array([0.0, eta, -eta, 0.0], dtype=complex)

    negative = -(positive[::-1] @ EXCHANGE.T)
    return np.vstack([negative, origin[None, :], positive])


def scattering_state(
    params: WalkParams,
    chi: float,
    p: float,
    k: float,
    branch: BranchSign,
    kind: ScatteringKind,
    half_width: int,
) -> RelativeState:
    """
    Improper eigenvector at real relative momentum k with eigenvalue
    e^{-i omega_{+s}(p, k)}, on the window [-half_width, half_width], unnormalized.
    """
    if isinstance(k, complex) or np.iscomplexobj(k):
        if abs(complex(k).imag) > 0:
            raise ContractViolation(f"Scattering states need real k, got {k}; use bound_wavefunction")
        k = complex(k).real
    if half_width < 1:
        raise ContractViolation(f"Window half width must be positive, got {half_width}")

    if kind is ScatteringKind.FREE:
        v1, v2, v3, v4 = _internal_vectors(params, p, k, branch)
        ys = np.arange(-half_width, half_width + 1)
        parity = ((-1.0) ** np.abs(ys))[:, None]
        amplitudes = (v1 + parity * v2) * np.exp(-1j * ys * k)[:, None] - (v3 + parity * v4) * np.exp(1j * ys * k)[:, None]
        amplitudes[half_width] = 0.0
    else:
        t_coeff = transmission(params, chi, p, k, branch)
        amplitudes = _interacting_profile(params, chi, p, k, branch, t_coeff, half_width)

    return RelativeState(y_min=-half_width, amplitudes=amplitudes, periodic=False)


# ---------------------------------------------------------------------------
# G functions and bound states
# ---------------------------------------------------------------------------

def G_value(params: WalkParams, p: float, region: RegionLabel, k_imag: Union[float, np.ndarray]) -> np.ndarray:
    """G_z(k_I) = -g_s(p - k) / g_+(p + k), k = z*pi/2 + i k_I; unimodular."""
    if region is RegionLabel.FREE:
        raise ContractViolation("G is defined on the bound-state regions only")
    k = region.z * math.pi / 2 + 1j * np.asarray(k_imag, dtype=float)
    numerator = np.asarray(g_branch(params, region.branch, p - k))
    denominator = np.asarray(g_branch(params, PLUS, p + k))
    assert np.all(np.abs(denominator) > 0), "A_z vanished"
    return -numerator / denominator


def G_function(params: WalkParams, p: float, region: RegionLabel, k_imag: float) -> UnitPhase:
    """G_z(k_I) as a point on the unit circle."""
    if k_imag > 0:
        raise ContractViolation(f"G_z is evaluated on k_I <= 0, got {k_imag}")
    check_generic_momentum(p)
    return UnitPhase(angle=float(np.angle(G_value(params, p, region, k_imag))))


def G_limit(params: WalkParams, p: float, region: RegionLabel) -> UnitPhase:
    """Closed-form limit of G_z(k_I) as k_I -> -inf."""
    check_generic_momentum(p)
    p = wrap_angle(p)
    inner = abs(p) < math.pi / 2
    angle = {
        RegionLabel.ZERO: -2.0 * abs(p),
        RegionLabel.TWO: 2.0 * abs(p),
        RegionLabel.PLUS_ONE: -2.0 * p if inner else 2.0 * p,
        RegionLabel.MINUS_ONE: 2.0 * p if inner else -2.0 * p,
    }[region]
    return UnitPhase(angle=angle)


def G_range_arc(params: WalkParams, p: float, region: RegionLabel) -> CircleArc:
    """Open arc swept by G_z between G_z(0) = +-1 and its limit."""
    origin = G_function(params, p, region, 0.0)
    limit = G_limit(params, p, region)
    if wrap_angle(limit.angle - origin.angle) >= 0:
        start, end = origin, limit
    else:
        start, end = limit, origin
    return CircleArc(start=start, end=end, counterclockwise=True, includes_start=False, includes_end=False)


def _exclusion(chi: float, p: float, tol: float) -> Tuple[bool, Optional[BranchSign]]:
    """(trivial, degenerate sign) for couplings excluded from the generic search."""
    if angular_distance(chi, 0.0) <= tol or angular_distance(chi, math.pi) <= tol:
        return True, None
    if angular_distance(chi, 2.0 * p) <= tol:
        return False, PLUS
    if angular_distance(chi, -2.0 * p) <= tol:
        return False, MINUS
    return False, None


def degenerate_state(params: WalkParams, p: float, sign: BranchSign) -> DegenerateState:
    """Amplitudes of f_{+-inf}; eigenvalue e^{+-2ip} when e^{i chi} = e^{+-2ip}."""
    lead = 1j * np.exp(1j * sign.sign * p)
    if sign is PLUS:
        zeta, zeta_prime = -lead, 0.0j
    else:
        zeta, zeta_prime = 0.0j, -lead
    return DegenerateState(
        mu=params.mu,
        p=p,
        sign=sign,
        zeta=complex(zeta),
        zeta_prime=complex(zeta_prime),
        eta=complex(params.mu / params.nu),
        eigenphase=UnitPhase(angle=2.0 * sign.sign * p),
    )


def degenerate_wavefunction(params: WalkParams, p: float, sign: BranchSign, half_width: int = 1) -> RelativeState:
    """Normalized f_{+-inf} on [-half_width, half_width]; nonzero only at |y| <= 1."""
    if half_width < 1:
        raise WindowError(f"f_inf needs |y| <= 1 inside the window, got half width {half_width}")
    state = degenerate_state(params, p, sign)
    amplitudes = np.zeros((2 * half_width + 1, 4), dtype=complex)
    top = np.array([state.zeta, 0.0, 0.0, state.zeta_prime], dtype=complex)
    amplitudes[half_width + 1] = top
    amplitudes[half_width] = [0.0, state.eta, -state.eta, 0.0]
    amplitudes[half_width - 1] = -(EXCHANGE @ top)
    return RelativeState(y_min=-half_width, amplitudes=amplitudes, periodic=False).normalized()


def _solve_region(
    params: WalkParams,
    chi: float,
    p: float,
    region: RegionLabel,
    lower_limit: Optional[float] = None,
) -> Optional[float]:
    """Root k_I < 0 of angle(G_z(k_I) e^{-i chi}), or None if e^{i chi} is off the G_z arc."""
    target = np.exp(-1j * chi)

    def mismatch(k_imag: float) -> float:
        return float(np.angle(complex(G_value(params, p, region, k_imag)) * target))

    at_origin = mismatch(0.0)
    if lower_limit is not None:
        brackets = [lower_limit]
    else:
        brackets = []
        width = settings.root_bracket_start
        while width <= settings.root_bracket_cap:
            brackets.append(-width)
            width *= 2.0

    for lower in brackets:
        at_lower = mismatch(lower)
        if at_lower == 0.0:
            return lower
        if np.sign(at_lower) == np.sign(at_origin):
            continue
        root = bisect(mismatch, lower, 0.0, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=400)
        # a jump of the wrapped angle through pi also changes sign
        if abs(mismatch(root)) > 1e-7:
            logger.debug(f"Region {region.value}: sign change at k_I={root} is a branch jump")
            return None
        logger.debug(f"Region {region.value}: root k_I={root} within bracket [{lower}, 0]")
        return root if root < 0 else None
    return None


def _bound_state_record(
    params: WalkParams, chi: float, p: float, region: RegionLabel, k_imag: float, special: bool
) -> BoundState:
    k_tilde = complex(region.z * math.pi / 2, k_imag)
    omega = omega_sr(params, p, k_tilde, PLUS, region.branch)
    if abs(omega.imag) > 1e-10:
        logger.warning(f"Bound-state quasi-energy has imaginary part {omega.imag:.3e} at p={p}, chi={chi}")
    omega_tilde = wrap_angle(omega.real)
    return BoundState(
        mu=params.mu,
        chi=chi,
        p=p,
        branch=region.branch,
        region=region,
        k_real=wrap_angle(k_tilde.real),
        k_imag=k_imag,
        omega_tilde=omega_tilde,
        eigenphase=UnitPhase.from_quasi_energy(omega_tilde),
        special=special,
    )


def _unique(found: List[Tuple[RegionLabel, float]], p: float, chi: float) -> Optional[Tuple[RegionLabel, float]]:
    if len(found) > 1:
        labels = ", ".join(f"{region.value}@{k_imag:.6g}" for region, k_imag in found)
        raise BoundStateError(f"Several bound-state roots at p={p}, chi={chi}: {labels}")
    return found[0] if found else None


def find_bound_state(params: WalkParams, chi: float, p: float) -> BoundResult:
    """
    The discrete eigenvalue of U2(chi, p) for generic p.

    None for e^{i chi} = +-1, the f_{+-inf} state for e^{i chi} = e^{+-2ip},
    otherwise the unique root of T_s = 0 over the four regions.
    """
    check_generic_momentum(p)
    p = wrap_angle(p)
    trivial, degenerate_sign = _exclusion(chi, p, settings.degenerate_tolerance)
    if trivial:
        logger.debug(f"No bound state for e^(i chi) = +-1 (chi={chi})")
        return None
    if degenerate_sign is not None:
        logger.info(f"Degenerate f_inf state with sign {degenerate_sign.value} at p={p}, chi={chi}")
        return degenerate_state(params, p, degenerate_sign)

    found = []
    for region in BOUND_REGIONS:
        root = _solve_region(params, chi, p, region)
        if root is not None:
            found.append((region, root))
    hit = _unique(found, p, chi)
    if hit is None:
        logger.warning(f"No root of T = 0 within k_I >= -{settings.root_bracket_cap} at p={p}, chi={chi}")
        return None
    return _bound_state_record(params, chi, p, hit[0], hit[1], special=False)


def find_special_bound_state(params: WalkParams, chi: float, p: float) -> Optional[BoundState]:
    """Discrete eigenvalue at p = z*pi/2, searched where the quasi-energy stays real."""
    z = special_momentum_index(p)
    if z is None:
        raise ContractViolation(f"p={p} is not a special momentum")
    p = z * math.pi / 2
    if _exclusion(chi, p, settings.degenerate_tolerance)[0]:
        return None

    lower = -special_decay_limit(params) * (1.0 - 1e-12)
    found = []
    for region in _special_regions(z):
        root = _solve_region(params, chi, p, region, lower_limit=lower)
        if root is not None:
            found.append((region, root))
    hit = _unique(found, p, chi)
    if hit is None:
        return None
    return _bound_state_record(params, chi, p, hit[0], hit[1], special=True)


def minimum_half_width(bound: BoundState, tolerance: float = 1e-12) -> int:
    """Smallest window whose discarded tail carries at most `tolerance` of the norm."""
    return int(math.ceil(math.log(tolerance) / (2.0 * bound.k_imag)))


def bound_wavefunction(
    params: WalkParams,
    chi: float,
    p: float,
    bound: BoundState,
    half_width: Optional[int] = None,
) -> RelativeState:
    """l2-normalized bound state on [-half_width, half_width], decaying like e^{k_I |y|}."""
    needed = minimum_half_width(bound)
    if half_width is None:
        half_width = needed + 4
    if half_width < needed:
        raise WindowError(
            f"Half width {half_width} too small for k_I={bound.k_imag:.6g}; need at least {needed}"
        )
    amplitudes = _interacting_profile(params, chi, p, bound.k_tilde, bound.branch, 0.0, half_width)
    return RelativeState(y_min=-half_width, amplitudes=amplitudes, periodic=False).normalized()


# ---------------------------------------------------------------------------
# Stationary states at p = 0
# ---------------------------------------------------------------------------

def stationary_state_p0(
    params: WalkParams,
    chi: float,
    n: int,
    kind: ScatteringKind,
    quadrature_points: Optional[int] = None,
    half_width: Optional[int] = None,
) -> RelativeState:
    """
    psi_n = int g_n(k) f^{-,kind}_k dk over (-pi, pi], g_n(k) = e^{ink} / sqrt(2 pi).

    Every f_k is an eigenvector of U2(chi, 0) with eigenvalue 1, so psi_n is
    one too; the result is normalized on the window. psi_0 vanishes and,
    since f_{-k} is a multiple of f_k, psi_{-n} repeats psi_n: only n >= 1 is accepted.
    """
    points = quadrature_points or settings.quadrature_points
    if points < 64:
        raise ContractViolation(f"Stationary states need at least 64 quadrature points, got {points}")
    if n < 1:
        raise ContractViolation(
            f"Stationary states are labelled by n >= 1 (psi_0 vanishes, psi_-n repeats psi_n), got {n}"
        )
    half_width = half_width or 4 * n + 48

    momenta = -math.pi + 2.0 * math.pi * np.arange(1, points + 1) / points
    weight = 2.0 * math.pi / points
    total = np.zeros((2 * half_width + 1, 4), dtype=complex)
    for k in momenta:
        profile = scattering_state(params, chi, 0.0, float(k), MINUS, kind, half_width).amplitudes
        total += weight * np.exp(1j * n * k) / math.sqrt(2.0 * math.pi) * profile
    logger.debug(f"Stationary state n={n}, kind={kind.value}: {points} quadrature points")
    return RelativeState(y_min=-half_width, amplitudes=total, periodic=False).normalized()


# ---------------------------------------------------------------------------
# Summary
# ---------------------------------------------------------------------------

def spectral_summary(params: WalkParams, chi: float, p: float) -> SpectralSummary:
    """Band arcs plus the discrete eigenvalue at (mu, chi, p)."""
    summary = SpectralSummary(mu=params.mu, chi=chi, p=p)
    z = special_momentum_index(p)
    try:
        if z is not None:
            summary.special = True
            summary.bands = special_band_arcs(params, p)
            summary.bound_state = find_special_bound_state(params, chi, p)
        else:
            summary.bands = band_arcs(params, p)
            result = find_bound_state(params, chi, p)
            if isinstance(result, BoundState):
                summary.bound_state = result
            elif isinstance(result, DegenerateState):
                summary.degenerate = result
    except ThirringError as e:
        logger.error(f"Spectral summary failed at mu={params.mu}, chi={chi}, p={p}: {str(e)}")
        summary.error = str(e)
    return summary
