"""
########################################################################
# Thirring Automaton Spectral Toolkit - output.py
#
# Origin: Created as part of the Thirring Automaton Spectral Toolkit
# Request: Two-particle spectral theory of the Thirring cellular automaton
# Version: 1.0.0
# Created: 2025-04-27
#
# Data Structure Diagram:
# - CSV:  '#'-prefixed metadata lines, header line, rows at 17 significant digits
# - JSON: {"metadata": {...}, "data": ...}, sorted keys, radians
# - SVG:  static matplotlib rendering of bands and sweeps
#
# Dependencies:
# - matplotlib
# - csv, json, hashlib
########################################################################
"""
import csv
import hashlib
import json
import logging
import math
from typing import IO, Any, Dict, Iterable, List, Optional, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from src.config import settings
from src.models import BandSet, CircleArc, EvolutionRecord, RunConfig, SpectralSummary, UnitPhase

# Configure logging
logger = logging.getLogger(__name__)

SWEEP_COLUMNS = [
    "chi",
    "p",
    "pp_f_start",
    "pp_f_end",
    "pm_f_start",
    "pm_f_end",
    "omega_tilde",
    "eigenphase",
    "k_R",
    "k_I",
    "branch",
    "region",
    "kind",
    "error",
]

EVOLUTION_COLUMNS = ["step", "norm", "second_moment", "bound_weight"]


def config_hash(config: RunConfig) -> str:
    """Short digest of the run configuration (output path excluded)."""
    payload = config.model_dump_json(exclude={"out"})
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]


def metadata(config: RunConfig) -> Dict[str, Any]:
    return {
        "version": settings.app_version,
        "config_hash": config_hash(config),
        "mu": config.mass,
        "chi": list(config.chi),
        "command": config.command,
    }


def format_value(value: Any, digits: Optional[int] = None) -> str:
    """Numbers at `digits` significant digits, None as an empty field."""
    digits = digits or settings.csv_digits
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    return str(value)


def write_csv(stream: IO[str], header: Sequence[str], rows: Iterable[Sequence[Any]], meta: Dict[str, Any]) -> None:
    for key, value in meta.items():
        stream.write(f"# {key}: {json.dumps(value)}\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(v) for v in row])


def write_json(stream: IO[str], payload: Any, meta: Dict[str, Any]) -> None:
    document = {"metadata": meta, "data": payload}
    stream.write(json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False))
    stream.write("\n")


# ---------------------------------------------------------------------------
# Row and payload builders
# ---------------------------------------------------------------------------

def _arc_bounds(bands: Optional[BandSet], key: str) -> List[Optional[float]]:
    if bands is None or key not in bands.arcs:
        return [None, None]
    arc = bands.arcs[key].ccw()
    return [arc.start.angle, arc.end.angle]


def sweep_row(summary: SpectralSummary) -> List[Any]:
    bound = summary.bound_state
    degenerate = summary.degenerate
    kind = "bound" if bound is not None else ("degenerate" if degenerate is not None else None)
    phase = summary.discrete_eigenphase
    return [
        summary.chi,
        summary.p,
        *_arc_bounds(summary.bands, "++f"),
        *_arc_bounds(summary.bands, "+-f"),
        bound.omega_tilde if bound is not None else (-phase.angle if phase is not None else None),
        phase.angle if phase is not None else None,
        bound.k_real if bound is not None else None,
        bound.k_imag if bound is not None else None,
        bound.branch.value if bound is not None else (degenerate.sign.value if degenerate is not None else None),
        bound.region.value if bound is not None else None,
        kind,
        summary.error,
    ]


def arc_payload(arc: CircleArc) -> Dict[str, Any]:
    arc = arc.ccw()
    return {
        "start": arc.start.angle,
        "end": arc.end.angle,
        "includes_start": arc.includes_start,
        "includes_end": arc.includes_end,
        "span": arc.span,
    }


def bands_payload(bands: BandSet) -> Dict[str, Any]:
    return {
        "mu": bands.mu,
        "p": bands.p,
        "arcs": {key: arc_payload(arc) for key, arc in bands.arcs.items()},
        "excluded": [phase.angle for phase in bands.excluded],
        "flat_eigenphase": bands.flat_eigenphase.angle if bands.flat_eigenphase is not None else None,
    }


def arc_from_payload(payload: Dict[str, Any]) -> CircleArc:
    return CircleArc(
        start=UnitPhase(angle=payload["start"]),
        end=UnitPhase(angle=payload["end"]),
        includes_start=payload["includes_start"],
        includes_end=payload["includes_end"],
    )


def evolution_rows(records: Sequence[EvolutionRecord]) -> List[List[Any]]:
    return [[r.step, r.norm, r.second_moment, r.bound_weight] for r in records]


# ---------------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------------

def _svg_metadata(meta: Dict[str, Any]) -> Dict[str, Any]:
    return {"Date": None, "Description": json.dumps(meta, sort_keys=True)}


def _save(fig: Any, path: str, meta: Dict[str, Any]) -> None:
    # fixed ids so identical input gives identical files
    with matplotlib.rc_context({"svg.hashsalt": "thirring", "svg.fonttype": "none"}):
        fig.savefig(path, format="svg", metadata=_svg_metadata(meta))
    plt.close(fig)
    logger.info(f"SVG saved to {path}")


def render_bands_svg(path: str, bands: BandSet, meta: Dict[str, Any]) -> None:
    """Arcs drawn on the unit circle, continuous bands thick."""
    fig, ax = plt.subplots(figsize=(6, 6))
    for key, arc in bands.arcs.items():
        arc = arc.ccw()
        angles = [arc.start.angle + arc.span * i / 199 for i in range(200)]
        width = 4 if key.endswith("f") else 1.5
        ax.plot([math.cos(a) for a in angles], [math.sin(a) for a in angles], linewidth=width, label=key)
    for phase in bands.excluded:
        ax.plot([math.cos(phase.angle)], [math.sin(phase.angle)], "o", color="black", fillstyle="none")
    ax.set_aspect("equal")
    ax.set_title(f"mu={bands.mu:g}, p={bands.p:g}")
    ax.legend(loc="center", fontsize="small")
    _save(fig, path, meta)


def render_sweep_svg(path: str, summaries: Sequence[SpectralSummary], meta: Dict[str, Any]) -> None:
    """Band edges against p with one discrete curve per coupling."""
    fig, ax = plt.subplots(figsize=(8, 6))
    ordered = sorted(summaries, key=lambda s: (s.chi, s.p))
    edges: Dict[str, List[List[float]]] = {"++f": [], "+-f": []}
    for summary in ordered:
        if summary.bands is None:
            continue
        for key in edges:
            if key in summary.bands.arcs:
                arc = summary.bands.arcs[key].ccw()
                edges[key].append([summary.p, arc.start.angle, arc.end.angle])
    colors = {"++f": "tab:red", "+-f": "gold"}
    for key, points in edges.items():
        for column in (1, 2):
            ax.plot([pt[0] for pt in points], [pt[column] for pt in points], ".", markersize=2, color=colors[key])

    for chi in sorted({s.chi for s in ordered}):
        curve = [(s.p, s.discrete_eigenphase.angle) for s in ordered if s.chi == chi and s.discrete_eigenphase]
        if curve:
            ax.plot(*zip(*curve), ".", markersize=3, color="black")
    ax.set_xlabel("p")
    ax.set_ylabel("eigenphase")
    ax.set_ylim(-math.pi, math.pi)
    _save(fig, path, meta)
