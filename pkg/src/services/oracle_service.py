"""
########################################################################
# Thirring Automaton Spectral Toolkit - services/oracle_service.py
#
# Origin: Created as part of the Thirring Automaton Spectral Toolkit
# Request: Two-particle spectral theory of the Thirring cellular automaton
# Version: 1.0.0
# Created: 2025-04-27
#
# UML Representation:
# +----------------------------+     +----------------------------+
# |      SpectrumService       |     |   OracleSpectrumService    |
# +----------------------------+     +----------------------------+
# | +discrete_eigenphases()    |<|-- | +__init__(n_sites, delta)  |
# +----------------------------+     | +classify()                |
#                                    | +discrete_eigenphases()    |
#                                    +----------------------------+
#
# Dependencies:
# - asyncio
# - src.oracle
# - src.spectral
# - services.spectrum_service module
########################################################################
"""
import asyncio
import logging
from typing import List, Optional, Tuple

from src.config import settings
from src.models import RingSpectrum, SpectrumClassification, UnitPhase, WalkParams
from src.oracle import classify_spectrum, diagonalize_ring
from src.services.spectrum_service import SpectrumService
from src.spectral import band_arcs, special_band_arcs, special_momentum_index

logger = logging.getLogger(__name__)


class OracleSpectrumService(SpectrumService):
    """Brute-force diagonalization of U2(chi, p) on a ring of n_sites sites."""

    name = "oracle"

    def __init__(self, n_sites: Optional[int] = None, delta_band: Optional[float] = None):
        self.n_sites = n_sites or settings.default_ring_size
        self.delta_band = delta_band

    def classify(self, params: WalkParams, chi: float, p: float) -> Tuple[RingSpectrum, SpectrumClassification]:
        spec = diagonalize_ring(params, chi, p, self.n_sites)
        bands = band_arcs(params, p) if special_momentum_index(p) is None else special_band_arcs(params, p)
        return spec, classify_spectrum(spec, bands, self.delta_band)

    async def discrete_eigenphases(self, params: WalkParams, chi: float, p: float) -> List[UnitPhase]:
        spec, classes = await asyncio.to_thread(self.classify, params, chi, p)
        if classes.ambiguous:
            logger.warning(f"Oracle at chi={chi}, p={p} left {len(classes.ambiguous)} eigenphases unclassified")
        return [UnitPhase(angle=float(spec.eigenphases[i])) for i in classes.isolated]
