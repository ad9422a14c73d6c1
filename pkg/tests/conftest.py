"""
Shared fixtures for the Thirring Automaton Spectral Toolkit tests.
"""
import pytest

from src.models import WalkParams


@pytest.fixture
def params() -> WalkParams:
    """Mass used throughout the reference figures."""
    return WalkParams(mu=0.8)


@pytest.fixture
def light_params() -> WalkParams:
    return WalkParams(mu=0.6)
