"""
Tests for the async spectrum services and the sweep driver.
"""
import math

import pytest

from src.models import SpectralSummary, UnitPhase
from src.phase_math import angular_distance
from src.services import AnalyticSpectrumService, OracleSpectrumService, SpectrumService, SweepService
from src.spectral import find_bound_state


class FixedSpectrumService(SpectrumService):
    """Reports one given phase regardless of the point."""

    name = "fixed"

    def __init__(self, phases):
        self.phases = phases

    async def discrete_eigenphases(self, params, chi, p):
        return list(self.phases)


class BrokenAnalyticService(AnalyticSpectrumService):
    async def summarize(self, params, chi, p):
        if chi > 1.0:
            raise RuntimeError("solver exploded")
        return await super().summarize(params, chi, p)


def test_services_share_the_interface():
    assert AnalyticSpectrumService.name == "analytic"
    assert OracleSpectrumService.name == "oracle"
    assert isinstance(OracleSpectrumService(n_sites=33), SpectrumService)


@pytest.mark.asyncio
async def test_analytic_service_reports_the_bound_state(params):
    phases = await AnalyticSpectrumService().discrete_eigenphases(params, math.pi / 2, 0.55)
    bound = find_bound_state(params, math.pi / 2, 0.55)
    assert phases == [bound.eigenphase]


@pytest.mark.asyncio
async def test_analytic_service_without_interaction(params):
    assert await AnalyticSpectrumService().discrete_eigenphases(params, 0.0, 0.55) == []


@pytest.mark.asyncio
async def test_oracle_service_agrees_with_analytic(params):
    analytic = await AnalyticSpectrumService().discrete_eigenphases(params, math.pi / 2, 0.55)
    oracle = await OracleSpectrumService(n_sites=129).discrete_eigenphases(params, math.pi / 2, 0.55)
    assert len(oracle) == 1
    assert angular_distance(oracle[0].angle, analytic[0].angle) < 1e-6


@pytest.mark.asyncio
async def test_sweep_rows_are_sorted(params):
    rows = await SweepService(max_workers=2).sweep(params, [math.pi / 2, 0.0], [1.2, 0.3])
    assert [(row.chi, row.p) for row in rows] == [
        (0.0, 0.3),
        (0.0, 1.2),
        (math.pi / 2, 0.3),
        (math.pi / 2, 1.2),
    ]
    assert all(row.error is None for row in rows)
    assert rows[0].discrete_eigenphase is None
    assert rows[2].bound_state is not None


@pytest.mark.asyncio
async def test_sweep_turns_failures_into_rows(params):
    service = SweepService(analytic=BrokenAnalyticService())
    rows = await service.sweep(params, [0.5, 2.0], [0.55])
    assert rows[0].error is None
    assert rows[1].error == "solver exploded"
    assert rows[1].bands is None


@pytest.mark.asyncio
async def test_spot_check_passes_against_the_oracle(params):
    service = SweepService(oracle=OracleSpectrumService(n_sites=129))
    rows = await service.sweep(params, [0.0, math.pi / 2], [0.55])
    results = await service.spot_check(params, rows, count=2, seed=3)
    assert len(results) == 2
    assert all(result.passed for result in results), [r.detail for r in results]


@pytest.mark.asyncio
async def test_spot_check_flags_a_mismatch(params):
    service = SweepService(oracle=FixedSpectrumService([UnitPhase(angle=0.1)]))
    rows = [
        SpectralSummary(mu=params.mu, chi=0.0, p=0.55),
        SpectralSummary(mu=params.mu, chi=0.5, p=0.0, special=True),
        SpectralSummary(mu=params.mu, chi=0.5, p=0.7, error="boom"),
    ]
    results = await service.spot_check(params, rows, count=5)
    assert len(results) == 1
    assert not results[0].passed
    assert "isolated 1" in results[0].detail


@pytest.mark.asyncio
async def test_spot_check_with_nothing_to_sample(params):
    assert await SweepService().spot_check(params, [], count=3) == []
