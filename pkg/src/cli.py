"""
########################################################################
# Thirring Automaton Spectral Toolkit - cli.py
#
# Origin: Created as part of the Thirring Automaton Spectral Toolkit
# Request: Two-particle spectral theory of the Thirring cellular automaton
# Version: 1.0.0
# Created: 2025-04-27
#
# Data Structure Diagram:
# - argv -> argparse.Namespace -> RunConfig (pydantic) -> cmd_<name>(config) -> exit code
# - Subcommands: dispersion, bands, sweep, bound-state, validate, evolve, stationary
# - Exit codes: 0 success, 1 failed checks, 2 invalid input or unwritable output
#
# Dependencies:
# - argparse
# - pydantic
# - src.spectral, src.oracle, src.dynamics, src.validation
# - src.services, src.output
########################################################################
"""
import argparse
import asyncio
import contextlib
import logging
import math
import re
import sys
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Sequence, TextIO

import numpy as np
from pydantic import ValidationError

from src.config import settings
from src.dynamics import ballistic_exponent, default_p_grid, evolve, prepare_packet
from src.errors import LightConeError, RangeError, ThirringError
from src.models import (
    BoundState,
    OutputFormat,
    PGrid,
    RunConfig,
    ScatteringKind,
    SpectralSummary,
    UnitPhase,
    WalkParams,
    WavepacketSpec,
)
from src.oracle import residual
from src.output import (
    EVOLUTION_COLUMNS,
    SWEEP_COLUMNS,
    bands_payload,
    evolution_rows,
    metadata,
    render_bands_svg,
    render_sweep_svg,
    sweep_row,
    write_csv,
    write_json,
)
from src.services import OracleSpectrumService, SweepService
from src.spectral import (
    band_arcs,
    bound_wavefunction,
    spectral_summary,
    special_momentum_index,
    stationary_state_p0,
)
from src.validation import SWEEP_COUPLINGS, run_validation
from src.walk import dispersion

logger = logging.getLogger(__name__)

DISPERSION_POINTS = 1024
STATIONARY_COLUMNS = ["kind", "y", "uu_re", "uu_im", "ud_re", "ud_im", "du_re", "du_im", "dd_re", "dd_im"]

_PI_MULTIPLE = re.compile(r"^([+-]?\d*\.?\d*)\*?pi(?:/(\d+(?:\.\d+)?))?$")


def parse_angle(text: str) -> float:
    """Float or a multiple of pi such as '-pi/5', '4pi/5', '0.5*pi'."""
    match = _PI_MULTIPLE.match(text.strip().lower())
    if match is None:
        return float(text)
    factor, divisor = match.groups()
    if factor in ("", "+", "-"):
        factor = factor + "1"
    return float(factor) * math.pi / float(divisor or 1.0)


# ---------------------------------------------------------------------------
# Argument handling
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mass", type=float, default=settings.default_mass, help="mass mu in (0, 1)")
    common.add_argument("--chi", type=parse_angle, action="append", help="coupling chi (repeatable, e.g. -pi/5)")
    common.add_argument("--p", type=parse_angle, help="half total momentum")
    common.add_argument("--p-grid", type=str, help="momentum grid min:max:count")
    common.add_argument("--ring-size", type=int, default=settings.default_ring_size, help="odd oracle ring size N")
    common.add_argument("--steps", type=int, default=100, help="number of automaton steps")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value)
    common.add_argument("--svg", action="store_true", help="also write a static SVG rendering")
    common.add_argument("--out", type=str, help="output path (stdout if omitted)")
    common.add_argument("--seed", type=int, default=0, help="seed of randomized checks")
    common.add_argument("--spot-check", type=int, default=0, help="rows re-checked against the oracle")
    common.add_argument("--delta-band", type=float, help="oracle band tolerance override")
    common.add_argument("--n", type=int, default=1, help="stationary-state label n >= 1")
    common.add_argument("--k0", type=parse_angle, default=0.3, help="packet relative momentum")
    common.add_argument("--sigma-p", type=float, default=0.05, help="packet width in p")
    common.add_argument("--sigma-k", type=float, default=0.1, help="packet width in k")
    common.add_argument("--y0", type=int, default=0, help="packet separation")
    common.add_argument("--log-level", type=str, default=settings.log_level, help="logging level")

    parser = argparse.ArgumentParser(prog="thirring", description=settings.app_description)
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    commands = parser.add_subparsers(dest="command", required=True)
    for name, summary in [
        ("dispersion", "single-particle dispersion omega(p)"),
        ("bands", "the six spectral arcs at one momentum"),
        ("sweep", "bands and discrete eigenphase over a (chi, p) grid"),
        ("bound-state", "bound or degenerate state at (chi, p) with its residual"),
        ("validate", "run the invariant suite"),
        ("evolve", "evolve a two-particle wavepacket on a ring"),
        ("stationary", "stationary states at p = 0"),
    ]:
        commands.add_parser(name, parents=[common], help=summary)
    return parser


_DEFAULT_COUPLINGS = {"sweep": SWEEP_COUPLINGS, "bound-state": SWEEP_COUPLINGS, "validate": SWEEP_COUPLINGS}


def config_from_args(args: argparse.Namespace) -> RunConfig:
    chi = args.chi or list(_DEFAULT_COUPLINGS.get(args.command, [0.0]))
    return RunConfig(
        command=args.command,
        mass=args.mass,
        chi=chi,
        p=args.p,
        p_grid=PGrid.parse(args.p_grid) if args.p_grid else None,
        ring_size=args.ring_size,
        steps=args.steps,
        out=args.out,
        format=args.format,
        emit_svg=args.svg,
        seed=args.seed,
        spot_check=args.spot_check,
        delta_band=args.delta_band,
        n=args.n,
        k0=args.k0,
        sigma_p=args.sigma_p,
        sigma_k=args.sigma_k,
        y0=args.y0,
    )


@contextlib.contextmanager
def _open_output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as stream:
        yield stream
    logger.info(f"Wrote {path}")


def _svg_path(config: RunConfig) -> str:
    if config.out:
        return str(Path(config.out).with_suffix(".svg"))
    return f"{config.command}.svg"


def _emit(config: RunConfig, header: Sequence[str], rows: List[List[Any]], payload: Any, meta: Dict[str, Any]) -> None:
    with _open_output(config.out) as stream:
        if config.format is OutputFormat.JSON:
            write_json(stream, payload, meta)
        else:
            write_csv(stream, header, rows, meta)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_dispersion(config: RunConfig) -> int:
    params = WalkParams(mu=config.mass)
    if config.p_grid is not None:
        momenta = np.array(config.p_grid.values())
    else:
        momenta = -math.pi + 2.0 * math.pi * np.arange(1, DISPERSION_POINTS + 1) / DISPERSION_POINTS
    omega = np.real(dispersion(params, momenta))
    rows = [[float(p), float(w)] for p, w in zip(momenta, omega)]
    payload = {"p": [r[0] for r in rows], "omega": [r[1] for r in rows]}
    _emit(config, ["p", "omega"], rows, payload, metadata(config))
    return 0


def cmd_bands(config: RunConfig) -> int:
    params = WalkParams(mu=config.mass)
    p = config.p if config.p is not None else settings.default_momentum
    meta = metadata(config)
    try:
        bands = band_arcs(params, p)
    except ThirringError as e:
        logger.error(f"Bands at p={p} unavailable: {str(e)}")
        with _open_output(config.out) as stream:
            write_json(stream, {"error": type(e).__name__, "message": str(e), "p": p}, meta)
        return 2

    payload = bands_payload(bands)
    with _open_output(config.out) as stream:
        if config.format is OutputFormat.CSV:
            rows = [[key, arc["start"], arc["end"], arc["includes_start"], arc["includes_end"]]
                    for key, arc in payload["arcs"].items()]
            rows += [["excluded", angle, angle, True, True] for angle in payload["excluded"]]
            write_csv(stream, ["arc", "start", "end", "includes_start", "includes_end"], rows, meta)
        else:
            write_json(stream, payload, meta)
    if config.emit_svg:
        render_bands_svg(_svg_path(config), bands, meta)
    return 0


def cmd_sweep(config: RunConfig) -> int:
    params = WalkParams(mu=config.mass)
    momenta = config.p_grid.values() if config.p_grid is not None else default_p_grid(settings.default_p_points)
    if config.p is not None:
        momenta = [config.p]
    service = SweepService(oracle=OracleSpectrumService(config.ring_size, config.delta_band))
    summaries = asyncio.run(service.sweep(params, config.chi, momenta))
    rows = [sweep_row(s) for s in summaries]
    meta = metadata(config)

    status = 0
    if config.spot_check:
        results = asyncio.run(service.spot_check(params, summaries, config.spot_check, config.seed))
        meta["spot_check_failures"] = [r.name for r in results if not r.passed]
        status = 0 if all(r.passed for r in results) else 1

    _emit(config, SWEEP_COLUMNS, rows, [dict(zip(SWEEP_COLUMNS, row)) for row in rows], meta)
    if config.emit_svg:
        render_sweep_svg(_svg_path(config), summaries, meta)
    return status


def _state_residual(params: WalkParams, summary: SpectralSummary) -> Optional[float]:
    bound = summary.bound_state
    if not isinstance(bound, BoundState):
        return None
    state = bound_wavefunction(params, summary.chi, summary.p, bound)
    return residual(params, summary.chi, summary.p, state, bound.eigenphase)


def cmd_bound_state(config: RunConfig) -> int:
    params = WalkParams(mu=config.mass)
    rows = []
    for chi in config.chi:
        for p in config.momenta(settings.default_momentum):
            summary = spectral_summary(params, chi, p)
            rows.append(sweep_row(summary) + [_state_residual(params, summary)])
    header = SWEEP_COLUMNS + ["residual"]
    _emit(config, header, rows, [dict(zip(header, row)) for row in rows], metadata(config))
    return 0


def cmd_validate(config: RunConfig) -> int:
    report = run_validation(config)
    rows = [[c.name, c.passed, c.seconds, c.detail] for c in report.checks]
    meta = metadata(config)
    meta["passed"] = report.passed
    _emit(config, ["check", "passed", "seconds", "detail"], rows, report.model_dump(mode="json"), meta)
    failed = [c.name for c in report.checks if not c.passed]
    if failed:
        logger.warning(f"Validation failed: {failed}")
    return 0 if report.passed else 1


def cmd_evolve(config: RunConfig) -> int:
    params = WalkParams(mu=config.mass)
    chi = config.chi[0]
    p0 = config.p if config.p is not None else settings.default_momentum
    spec = WavepacketSpec(p0=p0, k0=config.k0, sigma_p=config.sigma_p, sigma_k=config.sigma_k, y0=config.y0)
    if config.p_grid is not None:
        grid = config.p_grid.values()
    else:
        grid = [p0 + d for d in np.linspace(-3.0 * config.sigma_p, 3.0 * config.sigma_p, 9)]
    grid = [float(p) for p in grid if special_momentum_index(float(p)) is None]

    blocks = prepare_packet(params, spec, grid, config.ring_size)
    stopped: Optional[str] = None
    try:
        records = evolve(params, chi, blocks, config.steps)
    except LightConeError as e:
        records, stopped = e.records, str(e)

    meta = metadata(config)
    try:
        meta["ballistic_exponent"] = ballistic_exponent(records)
    except RangeError as e:
        logger.info(f"No spreading exponent: {str(e)}")

    rows = [row + [""] for row in evolution_rows(records)]
    if stopped:
        rows.append([records[-1].step + 1, None, None, None, "light_cone"])
    payload = {"records": [r.model_dump() for r in records], "stopped": stopped}
    _emit(config, EVOLUTION_COLUMNS + ["event"], rows, payload, meta)
    return 0


def cmd_stationary(config: RunConfig) -> int:
    params = WalkParams(mu=config.mass)
    chi = config.chi[0]
    meta = metadata(config)
    rows: List[List[Any]] = []
    payload: Dict[str, Any] = {}
    for kind in ScatteringKind:
        state = stationary_state_p0(params, chi, config.n, kind)
        meta[f"residual_{kind.value}"] = residual(params, chi, 0.0, state, UnitPhase(angle=0.0))
        for y, amplitude in zip(state.y_values, state.amplitudes):
            parts = [float(v) for a in amplitude for v in (a.real, a.imag)]
            rows.append([kind.value, int(y)] + parts)
        payload[kind.value] = {
            "y_min": state.y_min,
            "real": state.amplitudes.real.tolist(),
            "imag": state.amplitudes.imag.tolist(),
        }
    _emit(config, STATIONARY_COLUMNS, rows, payload, meta)
    return 0


COMMANDS = {
    "dispersion": cmd_dispersion,
    "bands": cmd_bands,
    "sweep": cmd_sweep,
    "bound-state": cmd_bound_state,
    "validate": cmd_validate,
    "evolve": cmd_evolve,
    "stationary": cmd_stationary,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    # Configure logging
    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        force=True,
    )
    # Set third-party loggers to WARNING to reduce noise
    logging.getLogger("matplotlib").setLevel(logging.WARNING)

    try:
        config = config_from_args(args)
    except (ValidationError, ValueError) as e:
        logger.error(f"Invalid configuration: {str(e)}")
        return 2

    logger.info(f"{settings.app_name} {settings.app_version}: {config.command} at mu={config.mass}")
    try:
        return COMMANDS[config.command](config)
    except OSError as e:
        logger.error(f"Cannot write output {e.filename or config.out}: {e.strerror}")
        return 2
    except ThirringError as e:
        logger.error(f"{config.command} failed: {str(e)}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
