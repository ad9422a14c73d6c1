"""
########################################################################
# Thirring Automaton Spectral Toolkit - phase_math.py
#
# Origin: Created as part of the Thirring Automaton Spectral Toolkit
# Request: Two-particle spectral theory of the Thirring cellular automaton
# Version: 1.0.0
# Created: 2025-04-27
#
# Data Structure Diagram:
# - arccos_principal: complex -> complex, Re in [0, pi]
# - wrap_angle: radians -> (-pi, pi]
# - CircleArc helpers: arc_contains, arcs_disjoint, arc_distance,
#   arc_from_quasi_energies
#
# Dependencies:
# - numpy
# - src.models
########################################################################
"""
import logging
import math
from typing import Tuple, Union

import numpy as np

from src.errors import DomainError
from src.models import CircleArc, UnitPhase

# Configure logging
logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi

ComplexLike = Union[complex, float, np.ndarray]


def arccos_principal(z: ComplexLike) -> ComplexLike:
    """
    Principal arccosine -i*log(z + i*sqrt(1 - z^2)) with Re in [0, pi].

    The two roots u = z +- i*sqrt(1 - z^2) satisfy u1*u2 = 1; the larger
    one is formed directly and the smaller one as its reciprocal, so the
    logarithm never sees a cancelled argument. Works elementwise on arrays.
    """
    arr = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"arccos_principal requires finite input, got {z!r}")

    root = np.sqrt(1.0 - arr * arr)
    u1 = arr + 1j * root
    u2 = arr - 1j * root
    with np.errstate(divide="ignore", invalid="ignore"):
        u = np.where(np.abs(u1) >= np.abs(u2), u1, 1.0 / u2)
    result = -1j * np.log(u)

    if np.ndim(z) == 0:
        return complex(result)
    return result


def wrap_angle(theta: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """Map angles to (-pi, pi]."""
    wrapped = np.pi - np.mod(np.pi - np.asarray(theta, dtype=float), TWO_PI)
    if np.ndim(theta) == 0:
        return float(wrapped)
    return wrapped


def angular_distance(a: float, b: float) -> float:
    """Shortest distance between two angles on the circle."""
    return abs(wrap_angle(a - b))


def _ccw_bounds(arc: CircleArc) -> Tuple[float, float, bool, bool]:
    arc = arc.ccw()
    return arc.start.angle, arc.span, arc.includes_start, arc.includes_end


def arc_contains(arc: CircleArc, phi: UnitPhase, tol: float = 0.0) -> bool:
    """Membership of phi in the arc, honouring endpoint flags within tol."""
    if tol < 0:
        raise ValueError(f"Tolerance must be non-negative, got {tol}")
    start, span, inc_start, inc_end = _ccw_bounds(arc)
    end = start + span

    if angular_distance(phi.angle, start) <= tol:
        return inc_start
    if angular_distance(phi.angle, end) <= tol:
        return inc_end
    offset = (phi.angle - start) % TWO_PI
    return offset < span


def arcs_disjoint(a: CircleArc, b: CircleArc, tol: float = 1e-12) -> bool:
    """True iff the two point sets do not intersect."""
    a_start, a_span, a_inc_start, a_inc_end = _ccw_bounds(a)
    b_start, b_span, b_inc_start, b_inc_end = _ccw_bounds(b)
    offset = (b_start - a_start) % TWO_PI

    # b unrolled once forward and once backward relative to a.start = 0
    for b_lo in (offset, offset - TWO_PI):
        b_hi = b_lo + b_span
        overlap = min(a_span, b_hi) - max(0.0, b_lo)
        if overlap > tol:
            return False
        if overlap < -tol:
            continue
        if abs(a_span - b_lo) <= tol and a_inc_end and b_inc_start:
            return False
        if abs(b_hi) <= tol and b_inc_end and a_inc_start:
            return False
    return True


def arc_distance(arc: CircleArc, phi: UnitPhase) -> float:
    """Angular distance from phi to the closure of the arc."""
    start, span, _, _ = _ccw_bounds(arc)
    if (phi.angle - start) % TWO_PI <= span:
        return 0.0
    return min(angular_distance(phi.angle, start), angular_distance(phi.angle, start + span))


def arc_from_quasi_energies(
    omega_a: float,
    omega_b: float,
    includes_a: bool,
    includes_b: bool,
) -> CircleArc:
    """
    Arc of eigenvalues e^{-i*omega} for omega running over the real interval
    between omega_a and omega_b (not reduced mod 2*pi).
    """
    if omega_a > omega_b:
        omega_a, omega_b = omega_b, omega_a
        includes_a, includes_b = includes_b, includes_a
    # decreasing omega is increasing angle
    return CircleArc(
        start=UnitPhase(angle=-omega_b),
        end=UnitPhase(angle=-omega_a),
        counterclockwise=True,
        includes_start=includes_b,
        includes_end=includes_a,
    )
