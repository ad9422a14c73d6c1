"""
########################################################################
# Thirring Automaton Spectral Toolkit - services/spectrum_service.py
#
# Origin: Created as part of the Thirring Automaton Spectral Toolkit
# Request: Two-particle spectral theory of the Thirring cellular automaton
# Version: 1.0.0
# Created: 2025-04-27
#
# UML Representation:
# +----------------------------+
# |      SpectrumService       |
# +----------------------------+
# | +name                      |
# | +discrete_eigenphases()    |
# +----------------------------+
#
# Dependencies:
# - abc (Abstract Base Class)
# - typing
# - models module
########################################################################
"""
from abc import ABC, abstractmethod
from typing import List

from src.models import UnitPhase, WalkParams


class SpectrumService(ABC):
    """Abstract source of the discrete spectrum of U2(chi, p)."""

    name: str = "abstract"

    @abstractmethod
    async def discrete_eigenphases(self, params: WalkParams, chi: float, p: float) -> List[UnitPhase]:
        """Eigenphases of the discrete (non-band, non-flat) spectrum at (mu, chi, p)."""
        pass
