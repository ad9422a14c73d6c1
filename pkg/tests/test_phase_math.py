"""
Tests for the principal arccosine and the circle-arc helpers.
"""
import math

import mpmath
import numpy as np
import pytest
from hypothesis import assume, given, settings as hyp_settings, strategies as st

from src.errors import DomainError
from src.models import CircleArc, UnitPhase
from src.phase_math import (
    angular_distance,
    arc_contains,
    arc_distance,
    arc_from_quasi_energies,
    arccos_principal,
    arcs_disjoint,
    wrap_angle,
)


def _arc(start: float, end: float, inc_start: bool = True, inc_end: bool = True) -> CircleArc:
    return CircleArc(
        start=UnitPhase(angle=start), end=UnitPhase(angle=end), includes_start=inc_start, includes_end=inc_end
    )


@given(st.floats(min_value=-0.999, max_value=0.999))
def test_arccos_matches_mpmath_on_the_real_segment(x):
    expected = float(mpmath.acos(x))
    result = arccos_principal(x)
    assert abs(result.imag) < 1e-15
    assert abs(result.real - expected) <= 1e-13


@given(
    st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False)
)
@hyp_settings(max_examples=300)
def test_arccos_matches_mpmath_off_the_cuts(z):
    assume(abs(z.imag) > 1e-3)
    assume(abs(z - 1) > 1e-3 and abs(z + 1) > 1e-3)
    expected = complex(mpmath.acos(mpmath.mpc(z.real, z.imag)))
    result = arccos_principal(z)
    assert abs(result - expected) <= 1e-11 * max(1.0, abs(expected))
    assert 0.0 <= result.real <= math.pi


@pytest.mark.parametrize("z", [1e100j, -3e80 + 2e80j, 5e50 - 1e50j, 1e-5 + 1e60j])
def test_arccos_is_accurate_far_from_the_origin(z):
    expected = complex(mpmath.acos(mpmath.mpc(z.real, z.imag)))
    result = arccos_principal(z)
    assert abs(result - expected) <= 1e-12 * abs(expected)


def test_arccos_principal_is_elementwise():
    values = np.array([0.0, 0.5, -0.5, 2.0j])
    result = arccos_principal(values)
    assert result.shape == (4,)
    assert result[0] == pytest.approx(math.pi / 2)
    assert result[1].real == pytest.approx(math.pi / 3)
    assert result[2].real == pytest.approx(2 * math.pi / 3)


@pytest.mark.parametrize("bad", [float("nan"), complex(float("inf"), 0.0)])
def test_arccos_rejects_non_finite_input(bad):
    with pytest.raises(DomainError):
        arccos_principal(bad)


@given(st.floats(min_value=-100.0, max_value=100.0))
def test_wrap_angle_lands_in_half_open_interval(theta):
    wrapped = wrap_angle(theta)
    assert -math.pi < wrapped <= math.pi
    assert abs(math.sin(wrapped) - math.sin(theta)) < 1e-9
    assert abs(math.cos(wrapped) - math.cos(theta)) < 1e-9


def test_wrap_angle_sends_minus_pi_to_pi():
    assert wrap_angle(-math.pi) == pytest.approx(math.pi)
    assert wrap_angle(math.pi) == pytest.approx(math.pi)
    assert UnitPhase(angle=-math.pi).angle == pytest.approx(math.pi)


def test_quasi_energy_phase_is_minus_omega():
    assert UnitPhase.from_quasi_energy(0.4).angle == pytest.approx(-0.4)
    assert UnitPhase.from_quasi_energy(2 * math.pi + 0.4).angle == pytest.approx(-0.4)


def test_arc_membership_honours_endpoint_flags():
    arc = _arc(0.2, 1.0, inc_start=True, inc_end=False)
    assert arc_contains(arc, UnitPhase(angle=0.5))
    assert arc_contains(arc, UnitPhase(angle=0.2))
    assert not arc_contains(arc, UnitPhase(angle=1.0))
    assert not arc_contains(arc, UnitPhase(angle=-0.5))


def test_arc_across_pi_contains_minus_one():
    arc = _arc(2.5, -2.5)
    assert arc.span == pytest.approx(2 * math.pi - 5.0)
    assert arc_contains(arc, UnitPhase(angle=math.pi))
    assert not arc_contains(arc, UnitPhase(angle=0.0))


def test_clockwise_arc_is_the_same_point_set():
    forward = _arc(0.2, 1.0)
    backward = CircleArc(start=UnitPhase(angle=1.0), end=UnitPhase(angle=0.2), counterclockwise=False)
    assert backward.ccw().start.angle == pytest.approx(0.2)
    assert arc_contains(backward, UnitPhase(angle=0.6)) == arc_contains(forward, UnitPhase(angle=0.6))


def test_touching_arcs_are_disjoint_only_if_an_endpoint_is_open():
    closed_left = _arc(0.0, 1.0)
    open_right = _arc(1.0, 2.0, inc_start=False)
    closed_right = _arc(1.0, 2.0)
    assert arcs_disjoint(closed_left, open_right)
    assert not arcs_disjoint(closed_left, closed_right)


def test_overlapping_arcs_across_the_cut():
    a = _arc(3.0, -3.0)
    b = _arc(-3.1, -2.0)
    assert not arcs_disjoint(a, b)
    assert arcs_disjoint(a, _arc(-2.9, -2.0))


def test_arc_distance():
    arc = _arc(0.0, 1.0)
    assert arc_distance(arc, UnitPhase(angle=0.5)) == 0.0
    assert arc_distance(arc, UnitPhase(angle=1.25)) == pytest.approx(0.25)
    assert arc_distance(arc, UnitPhase(angle=-0.1)) == pytest.approx(0.1)


def test_arc_from_quasi_energies_reverses_orientation():
    arc = arc_from_quasi_energies(0.3, 0.8, True, False)
    # omega in [0.3, 0.8) maps to angles (-0.8, -0.3]
    assert arc.start.angle == pytest.approx(-0.8)
    assert arc.end.angle == pytest.approx(-0.3)
    assert not arc.includes_start
    assert arc.includes_end
    assert angular_distance(arc.span, 0.5) < 1e-12
