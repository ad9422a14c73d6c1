"""
########################################################################
# Thirring Automaton Spectral Toolkit - errors.py
#
# Origin: Created as part of the Thirring Automaton Spectral Toolkit
# Request: Two-particle spectral theory of the Thirring cellular automaton
# Version: 1.0.0
# Created: 2025-04-27
#
# UML Representation:
# +-------------------------+
# |      ThirringError      |  (ValueError)
# +-------------------------+
#   ^-- DomainError, ContractViolation, SpecialMomentumError, PoleError,
#       WindowError, RangeError, OracleError, BoundStateError,
#       LightConeError
#
# Dependencies:
# - typing
########################################################################
"""
from typing import Any, List, Optional


class ThirringError(ValueError):
    """Base class for every error raised by the toolkit."""


class DomainError(ThirringError):
    """Input outside the domain of a function (e.g. non-finite)."""


class ContractViolation(ThirringError):
    """A documented pre-condition of an operation does not hold."""


class SpecialMomentumError(ThirringError):
    """Total momentum within the guard band of z*pi/2."""

    def __init__(self, p: float, guard: float):
        self.p = p
        self.guard = guard
        super().__init__(
            f"Total momentum p={p!r} lies within {guard:g} of a special momentum z*pi/2; "
            "use the stationary-state handlers"
        )


class PoleError(ThirringError):
    """Vanishing denominator of a transmission coefficient."""


class WindowError(ThirringError):
    """Window too small to hold a normalized state."""


class RangeError(ThirringError):
    """Insufficient dynamic range for a fit."""


class OracleError(ThirringError):
    """Eigendecomposition failed its residual or orthonormality check."""

    def __init__(self, message: str, report: Optional[dict] = None):
        self.report = report or {}
        super().__init__(f"{message}; condition report: {self.report}")


class BoundStateError(ThirringError):
    """More than one region produced a root of T = 0."""


class LightConeError(ThirringError):
    """Evolution stopped because the light cone reached the ring boundary."""

    def __init__(self, message: str, records: Optional[List[Any]] = None):
        self.records = records or []
        super().__init__(message)
