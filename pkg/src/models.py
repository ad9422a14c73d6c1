"""
########################################################################
# Thirring Automaton Spectral Toolkit - models.py
#
# Origin: Created as part of the Thirring Automaton Spectral Toolkit
# Request: Two-particle spectral theory of the Thirring cellular automaton
# Version: 1.0.0
# Created: 2025-04-27
#
# Data Structure Diagram:
# - BranchSign (Enum): PLUS, MINUS
# - RegionLabel (Enum): FREE, ZERO, TWO, PLUS_ONE, MINUS_ONE
# - ScatteringKind (Enum): FREE, INTERACTING
# - WalkParams: mu, nu
# - UnitPhase: angle
# - CircleArc: start, end, counterclockwise, includes_start, includes_end
# - BandSet: mu, p, arcs, excluded, flat_eigenphase
# - CenterOfMass: p, k_real, k_imag
# - DegeneracyPartner: s, r, k_real, k_imag
# - RelativeState: y_min, amplitudes, periodic
# - BoundState: branch, region, k_real, k_imag, omega_tilde, eigenphase
# - DegenerateState: sign, zeta, zeta_prime, eta, eigenphase
# - SpectralSummary: mu, chi, p, bands, bound_state, degenerate, error
# - RingSpectrum: n_sites, eigenphases, eigenvectors, antisymmetric
# - SpectrumClassification: in_band, isolated, flat, ambiguous
# - WavepacketSpec: p0, k0, sigma_p, sigma_k, y0
# - EvolutionRecord: step, y_distribution, norm, bound_weight
# - PGrid / RunConfig: validated command-line configuration
# - CheckResult / ValidationReport: invariant suite output
#
# Dependencies:
# - pydantic
# - numpy
# - enum
# - typing
########################################################################
"""
import math
from enum import Enum
from typing import Dict, List, Optional

import numpy as np
from pydantic import BaseModel, Field, computed_field, field_validator, model_validator


def _wrap(angle: float) -> float:
    wrapped = math.remainder(angle, 2.0 * math.pi)
    return math.pi if wrapped <= -math.pi else wrapped


class BranchSign(str, Enum):
    """Dispersion branch s in {+, -}."""
    PLUS = "+"
    MINUS = "-"

    @property
    def sign(self) -> int:
        return 1 if self is BranchSign.PLUS else -1

    @classmethod
    def from_sign(cls, value: int) -> "BranchSign":
        return cls.PLUS if value > 0 else cls.MINUS

    def flip(self) -> "BranchSign":
        return BranchSign.MINUS if self is BranchSign.PLUS else BranchSign.PLUS


class RegionLabel(str, Enum):
    """Region of complex relative momentum on which the quasi-energy is real."""
    FREE = "f"
    ZERO = "0"
    TWO = "2"
    PLUS_ONE = "+1"
    MINUS_ONE = "-1"

    @property
    def z(self) -> Optional[int]:
        """Integer z with Re k = z*pi/2, None for the real line."""
        return {
            RegionLabel.FREE: None,
            RegionLabel.ZERO: 0,
            RegionLabel.TWO: 2,
            RegionLabel.PLUS_ONE: 1,
            RegionLabel.MINUS_ONE: -1,
        }[self]

    @property
    def branch(self) -> BranchSign:
        """Second branch index of the bound states living on this region."""
        return BranchSign.PLUS if self in (RegionLabel.ZERO, RegionLabel.TWO) else BranchSign.MINUS


BOUND_REGIONS = (RegionLabel.ZERO, RegionLabel.TWO, RegionLabel.PLUS_ONE, RegionLabel.MINUS_ONE)


class ScatteringKind(str, Enum):
    """Free solutions vanish at y = 0; interacting ones carry a transmission coefficient."""
    FREE = "free"
    INTERACTING = "interacting"


class WalkParams(BaseModel):
    """Mass/hopping pair of the Dirac walk, built from the mass alone."""
    mu: float = Field(..., gt=0.0, lt=1.0, description="Mass parameter mu in (0, 1)")

    class Config:
        frozen = True

    @computed_field  # type: ignore[misc]
    @property
    def nu(self) -> float:
        return math.sqrt(1.0 - self.mu * self.mu)


class UnitPhase(BaseModel):
    """Point e^{i*angle} on the unit circle, angle stored in (-pi, pi]."""
    angle: float = Field(..., description="Argument of the point in radians")

    class Config:
        frozen = True

    @field_validator("angle")
    @classmethod
    def normalize_angle(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError(f"Phase angle must be finite, got {value!r}")
        return _wrap(float(value))

    @classmethod
    def from_quasi_energy(cls, omega: float) -> "UnitPhase":
        """Eigenvalue e^{-i*omega} as a phase."""
        return cls(angle=-omega)

    @property
    def point(self) -> complex:
        return complex(math.cos(self.angle), math.sin(self.angle))


class CircleArc(BaseModel):
    """Arc of the unit circle stored by its endpoint angles."""
    start: UnitPhase = Field(..., description="First endpoint in the direction of travel")
    end: UnitPhase = Field(..., description="Last endpoint in the direction of travel")
    counterclockwise: bool = Field(True, description="Direction of travel from start to end")
    includes_start: bool = Field(True, description="Whether the start point belongs to the arc")
    includes_end: bool = Field(True, description="Whether the end point belongs to the arc")

    class Config:
        frozen = True

    def ccw(self) -> "CircleArc":
        """The same point set described counterclockwise."""
        if self.counterclockwise:
            return self
        return CircleArc(
            start=self.end,
            end=self.start,
            counterclockwise=True,
            includes_start=self.includes_end,
            includes_end=self.includes_start,
        )

    @property
    def span(self) -> float:
        arc = self.ccw()
        return (arc.end.angle - arc.start.angle) % (2.0 * math.pi)


class BandSet(BaseModel):
    """Continuous bands and discrete-band habitats for fixed (mu, p)."""
    mu: float = Field(..., description="Mass parameter")
    p: float = Field(..., description="Half total momentum")
    arcs: Dict[str, CircleArc] = Field(..., description="Arcs keyed by branch pair and region label")
    excluded: List[UnitPhase] = Field(default_factory=list, description="Phases e^{+-2ip} that belong to no arc")
    flat_eigenphase: Optional[UnitPhase] = Field(None, description="Infinitely degenerate eigenvalue at special momenta")


class CenterOfMass(BaseModel):
    """Half total momentum p and complex half relative momentum k."""
    p: float = Field(..., description="Half total momentum in (-pi, pi]")
    k_real: float = Field(0.0, description="Real part of the half relative momentum in (-pi, pi]")
    k_imag: float = Field(0.0, description="Imaginary part of the half relative momentum")

    @field_validator("p", "k_real")
    @classmethod
    def brillouin(cls, value: float) -> float:
        return _wrap(float(value))

    @classmethod
    def from_particle_momenta(cls, p1: float, p2: float) -> "CenterOfMass":
        return cls(p=0.5 * (p1 + p2), k_real=0.5 * (p1 - p2))

    @property
    def k(self) -> complex:
        return complex(self.k_real, self.k_imag)


class DegeneracyPartner(BaseModel):
    """Branch pair and relative momentum sharing one eigenphase with others."""
    s: BranchSign
    r: BranchSign
    k_real: float
    k_imag: float = 0.0

    @property
    def k(self) -> complex:
        return complex(self.k_real, self.k_imag)


class RelativeState(BaseModel):
    """Amplitudes y -> Spinor4 on a window or ring of the relative coordinate."""
    y_min: int = Field(..., description="Relative coordinate of the first row")
    amplitudes: np.ndarray = Field(..., description="Complex array of shape (sites, 4)")
    periodic: bool = Field(False, description="Cyclic index arithmetic (ring)")

    class Config:
        arbitrary_types_allowed = True

    @field_validator("amplitudes")
    @classmethod
    def check_shape(cls, value: np.ndarray) -> np.ndarray:
        value = np.asarray(value, dtype=complex)
        if value.ndim != 2 or value.shape[1] != 4:
            raise ValueError(f"Amplitudes must have shape (sites, 4), got {value.shape}")
        if not np.all(np.isfinite(value)):
            raise ValueError("Amplitudes must be finite")
        return value

    @property
    def n_sites(self) -> int:
        return int(self.amplitudes.shape[0])

    @property
    def y_max(self) -> int:
        return self.y_min + self.n_sites - 1

    @property
    def y_values(self) -> np.ndarray:
        return np.arange(self.y_min, self.y_max + 1)

    @property
    def is_symmetric(self) -> bool:
        return self.y_min == -self.y_max

    def at(self, y: int) -> np.ndarray:
        """Spinor4 at relative coordinate y (zero outside a window)."""
        if self.periodic:
            return self.amplitudes[(y - self.y_min) % self.n_sites]
        if y < self.y_min or y > self.y_max:
            return np.zeros(4, dtype=complex)
        return self.amplitudes[y - self.y_min]

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def with_amplitudes(self, amplitudes: np.ndarray) -> "RelativeState":
        return RelativeState(y_min=self.y_min, amplitudes=amplitudes, periodic=self.periodic)

    def normalized(self) -> "RelativeState":
        return self.with_amplitudes(self.amplitudes / self.norm())

    def vdot(self, other: "RelativeState") -> complex:
        """Inner product <self|other> on a common layout."""
        if self.y_min != other.y_min or self.n_sites != other.n_sites:
            raise ValueError("Inner product requires states on the same layout")
        return complex(np.vdot(self.amplitudes, other.amplitudes))


class BoundState(BaseModel):
    """Normalizable eigenvector at complex relative momentum with T = 0."""
    mu: float
    chi: float
    p: float
    branch: BranchSign = Field(..., description="Transmission coefficient that vanishes")
    region: RegionLabel = Field(..., description="Region z with Re k = z*pi/2")
    k_real: float = Field(..., description="z*pi/2")
    k_imag: float = Field(..., lt=0.0, description="Decay rate, strictly negative")
    omega_tilde: float = Field(..., description="Real quasi-energy in (-pi, pi]")
    eigenphase: UnitPhase = Field(..., description="Eigenvalue e^{-i*omega_tilde}")
    special: bool = Field(False, description="Found on a special momentum p = z*pi/2")

    @property
    def k_tilde(self) -> complex:
        return complex(self.k_real, self.k_imag)


class DegenerateState(BaseModel):
    """Finitely supported eigenvector f_{+-inf}, nonzero only at y in {-1, 0, 1}."""
    mu: float
    p: float
    sign: BranchSign = Field(..., description="Eigenvalue e^{+2ip} for PLUS, e^{-2ip} for MINUS")
    zeta: complex = Field(..., description="Up-up amplitude at y = 1")
    zeta_prime: complex = Field(..., description="Down-down amplitude at y = 1")
    eta: complex = Field(..., description="Up-down amplitude at y = 0")
    eigenphase: UnitPhase

    class Config:
        arbitrary_types_allowed = True


class SpectralSummary(BaseModel):
    """Spectral resolution at one (mu, chi, p) point; one row of a sweep."""
    mu: float
    chi: float
    p: float
    special: bool = False
    bands: Optional[BandSet] = None
    bound_state: Optional[BoundState] = None
    degenerate: Optional[DegenerateState] = None
    error: Optional[str] = None

    @property
    def discrete_eigenphase(self) -> Optional[UnitPhase]:
        if self.bound_state is not None:
            return self.bound_state.eigenphase
        if self.degenerate is not None:
            return self.degenerate.eigenphase
        return None


class RingSpectrum(BaseModel):
    """Eigendecomposition of U2(chi, p) truncated to a ring of N sites."""
    mu: float
    chi: float
    p: float
    n_sites: int = Field(..., description="Odd ring size N")
    eigenphases: np.ndarray = Field(..., description="Angles of the 4N eigenvalues")
    eigenvectors: np.ndarray = Field(..., description="Columns are eigenvectors in the site-major basis")
    antisymmetric: np.ndarray = Field(..., description="Boolean sector tag per eigenvector")

    class Config:
        arbitrary_types_allowed = True

    @property
    def phases(self) -> List[UnitPhase]:
        return [UnitPhase(angle=float(a)) for a in self.eigenphases]

    @property
    def antisymmetric_indices(self) -> List[int]:
        return [int(i) for i in np.flatnonzero(self.antisymmetric)]


class SpectrumClassification(BaseModel):
    """Partition of the antisymmetric-sector indices."""
    in_band: List[int] = Field(default_factory=list)
    isolated: List[int] = Field(default_factory=list)
    flat: List[int] = Field(default_factory=list)
    ambiguous: List[int] = Field(default_factory=list)
    delta_band: float
    g_min: float


class WavepacketSpec(BaseModel):
    """Gaussian two-particle packet centred at (p0, k0) and separation y0."""
    p0: float = Field(..., description="Centre of the half total momentum")
    k0: float = Field(..., description="Centre of the half relative momentum")
    sigma_p: float = Field(..., gt=0.0, description="Width in p")
    sigma_k: float = Field(..., gt=0.0, description="Width in k")
    y0: int = Field(..., description="Initial separation")

    @property
    def center(self) -> CenterOfMass:
        return CenterOfMass(p=self.p0, k_real=self.k0)


class EvolutionRecord(BaseModel):
    """Observables after `step` applications of the automaton."""
    step: int
    y_distribution: List[float] = Field(..., description="Probability per relative coordinate, ring order")
    norm: float
    second_moment: float = Field(..., description="<y^2> of the distribution")
    bound_weight: Optional[float] = None


class PGrid(BaseModel):
    """Uniform momentum grid parsed from min:max:count."""
    start: float
    stop: float
    count: int = Field(..., ge=1)

    @classmethod
    def parse(cls, text: str) -> "PGrid":
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"Expected min:max:count, got {text!r}")
        return cls(start=float(parts[0]), stop=float(parts[1]), count=int(parts[2]))

    def values(self) -> List[float]:
        return [float(v) for v in np.linspace(self.start, self.stop, self.count)]


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class RunConfig(BaseModel):
    """Validated merge of settings and command-line flags."""
    command: str
    mass: float = Field(..., gt=0.0, lt=1.0, description="Mass mu in (0, 1)")
    chi: List[float] = Field(default_factory=lambda: [0.0], description="Coupling values")
    p: Optional[float] = Field(None, description="Single half total momentum")
    p_grid: Optional[PGrid] = Field(None, description="Momentum grid")
    ring_size: int = Field(..., ge=5, le=1025, description="Odd ring size")
    steps: int = Field(100, ge=0)
    out: Optional[str] = None
    format: OutputFormat = OutputFormat.CSV
    emit_svg: bool = False
    seed: int = 0
    spot_check: int = Field(0, ge=0)
    delta_band: Optional[float] = Field(None, ge=0.0)
    n: int = Field(1, description="Stationary-state label n >= 1")
    k0: float = 0.3
    sigma_p: float = Field(0.05, gt=0.0)
    sigma_k: float = Field(0.1, gt=0.0)
    y0: int = 0

    class Config:
        extra = "ignore"

    @field_validator("ring_size")
    @classmethod
    def odd_ring(cls, value: int) -> int:
        if value % 2 == 0:
            raise ValueError(f"Ring size must be odd, got {value}")
        return value

    @model_validator(mode="after")
    def grid_or_point(self) -> "RunConfig":
        if self.p is not None and self.p_grid is not None:
            raise ValueError("Use either --p or --p-grid, not both")
        return self

    def momenta(self, default: float) -> List[float]:
        if self.p_grid is not None:
            return self.p_grid.values()
        return [self.p if self.p is not None else default]


class CheckResult(BaseModel):
    """Outcome of one invariant check."""
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


class ValidationReport(BaseModel):
    """Machine-readable pass/fail report of the invariant suite."""
    mu: float
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)
