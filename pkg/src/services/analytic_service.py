"""
########################################################################
# Thirring Automaton Spectral Toolkit - services/analytic_service.py
#
# Origin: Created as part of the Thirring Automaton Spectral Toolkit
# Request: Two-particle spectral theory of the Thirring cellular automaton
# Version: 1.0.0
# Created: 2025-04-27
#
# UML Representation:
# +----------------------------+     +----------------------------+
# |      SpectrumService       |     |  AnalyticSpectrumService   |
# +----------------------------+     +----------------------------+
# | +discrete_eigenphases()    |<|-- | +summarize()               |
# +----------------------------+     | +discrete_eigenphases()    |
#                                    +----------------------------+
#
# Dependencies:
# - asyncio
# - src.spectral
# - services.spectrum_service module
########################################################################
"""
import asyncio
import logging
from typing import List

from src.models import SpectralSummary, UnitPhase, WalkParams
from src.services.spectrum_service import SpectrumService
from src.spectral import spectral_summary

logger = logging.getLogger(__name__)


class AnalyticSpectrumService(SpectrumService):
    """Closed-form band arcs and root-found bound states."""

    name = "analytic"

    async def summarize(self, params: WalkParams, chi: float, p: float) -> SpectralSummary:
        """Spectral summary computed off the event loop; failures land in `error`."""
        return await asyncio.to_thread(spectral_summary, params, chi, p)

    async def discrete_eigenphases(self, params: WalkParams, chi: float, p: float) -> List[UnitPhase]:
        summary = await self.summarize(params, chi, p)
        if summary.error:
            logger.error(f"Analytic evaluation failed at chi={chi}, p={p}: {summary.error}")
            return []
        phase = summary.discrete_eigenphase
        return [phase] if phase is not None else []
