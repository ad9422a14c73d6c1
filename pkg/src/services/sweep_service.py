"""
########################################################################
# Thirring Automaton Spectral Toolkit - services/sweep_service.py
#
# Origin: Created as part of the Thirring Automaton Spectral Toolkit
# Request: Two-particle spectral theory of the Thirring cellular automaton
# Version: 1.0.0
# Created: 2025-04-27
#
# UML Representation:
# +-------------------------------+
# |         SweepService          |
# +-------------------------------+
# | -analytic: AnalyticService    |
# | -oracle: OracleService        |
# | +sweep()                      |
# | +spot_check()                 |
# +-------------------------------+
#
# Dependencies:
# - asyncio
# - numpy
# - services.analytic_service, services.oracle_service
########################################################################
"""
import asyncio
import logging
import time
from typing import List, Optional, Sequence

import numpy as np

from src.config import settings
from src.models import CheckResult, SpectralSummary, WalkParams
from src.phase_math import angular_distance
from src.services.analytic_service import AnalyticSpectrumService
from src.services.oracle_service import OracleSpectrumService
from src.services.spectrum_service import SpectrumService

logger = logging.getLogger(__name__)

SPOT_CHECK_TOLERANCE = 1e-6


class SweepService:
    """Evaluates (chi, p) grids concurrently and cross-checks rows against the oracle."""

    def __init__(
        self,
        analytic: Optional[AnalyticSpectrumService] = None,
        oracle: Optional[SpectrumService] = None,
        max_workers: Optional[int] = None,
    ):
        self.analytic = analytic or AnalyticSpectrumService()
        self.oracle = oracle or OracleSpectrumService()
        self.max_workers = max_workers or settings.max_workers

    async def sweep(self, params: WalkParams, chis: Sequence[float], momenta: Sequence[float]) -> List[SpectralSummary]:
        """One summary per grid point, sorted by (chi, p); a failing point becomes a row with `error` set."""
        semaphore = asyncio.Semaphore(self.max_workers)

        async def evaluate(chi: float, p: float) -> SpectralSummary:
            async with semaphore:
                try:
                    return await self.analytic.summarize(params, chi, p)
                except Exception as e:
                    logger.error(f"Sweep point chi={chi}, p={p} failed: {str(e)}")
                    return SpectralSummary(mu=params.mu, chi=chi, p=p, error=str(e))

        logger.info(f"Sweeping {len(chis)} couplings x {len(momenta)} momenta at mu={params.mu}")
        rows = await asyncio.gather(*(evaluate(chi, p) for chi in chis for p in momenta))
        failures = sum(1 for row in rows if row.error)
        if failures:
            logger.warning(f"{failures} of {len(rows)} sweep points recorded an error")
        return sorted(rows, key=lambda row: (row.chi, row.p))

    async def spot_check(
        self,
        params: WalkParams,
        rows: Sequence[SpectralSummary],
        count: int,
        seed: int = 0,
        tolerance: float = SPOT_CHECK_TOLERANCE,
    ) -> List[CheckResult]:
        """
        Compare the discrete eigenphase of `count` random rows with the
        isolated eigenphases of the oracle.

        Rows with errors or at special momenta are not sampled.
        """
        candidates = [row for row in rows if not row.error and not row.special]
        if not candidates or count <= 0:
            return []
        rng = np.random.default_rng(seed)
        picks = rng.choice(len(candidates), size=min(count, len(candidates)), replace=False)

        async def check(row: SpectralSummary) -> CheckResult:
            started = time.perf_counter()
            expected = row.discrete_eigenphase
            found = await self.oracle.discrete_eigenphases(params, row.chi, row.p)
            if expected is None:
                passed = not found
                detail = f"no analytic discrete eigenphase, oracle isolated {len(found)}"
            elif len(found) != 1:
                passed = False
                detail = f"oracle isolated {len(found)} eigenphases, expected 1"
            else:
                gap = angular_distance(found[0].angle, expected.angle)
                passed = gap <= tolerance
                detail = f"eigenphase mismatch {gap:.3e}"
            return CheckResult(
                name=f"spot chi={row.chi:.6g} p={row.p:.6g}",
                passed=passed,
                detail=detail,
                seconds=time.perf_counter() - started,
            )

        results = await asyncio.gather(*(check(candidates[int(i)]) for i in sorted(picks)))
        failed = [r.name for r in results if not r.passed]
        if failed:
            logger.warning(f"Spot check failed for {failed}")
        logger.info(f"Spot-checked {len(results)} sweep rows against the {self.oracle.name} service")
        return list(results)
