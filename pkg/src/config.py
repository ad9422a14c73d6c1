"""
########################################################################
# Thirring Automaton Spectral Toolkit - config.py
#
# Origin: Created as part of the Thirring Automaton Spectral Toolkit
# Request: Two-particle spectral theory of the Thirring cellular automaton
# Version: 1.0.0
# Created: 2025-04-27
#
# Data Structure Diagram:
# - Settings: app metadata, default physical parameters, numerical
#             tolerances, root-finder brackets, output formatting
#
# Dependencies:
# - pydantic_settings
########################################################################
"""
import math

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings."""

    # Application metadata
    app_name: str = "Thirring Automaton Spectral Toolkit"
    app_version: str = "1.0.0"
    app_description: str = "Analytic two-particle spectrum of the Thirring QCA with a finite-ring oracle"

    # Physical defaults
    default_mass: float = 0.8
    default_momentum: float = 0.55
    default_ring_size: int = 129
    default_p_points: int = 128

    # Special momenta p = z*pi/2 are routed to the stationary handlers within this guard band
    special_momentum_guard: float = 1e-9

    # Oracle classification: delta_band = scale * 2*pi / N, g_min = gap_factor * delta_band
    band_tolerance_scale: float = 1e-3
    gap_factor: float = 10.0

    # Bound-state root finding on the negative k_I half line
    root_bracket_start: float = 4.0
    root_bracket_cap: float = 80.0
    degenerate_tolerance: float = 1e-12

    # Stationary states at p = 0
    quadrature_points: int = 512

    # Output
    csv_digits: int = 17
    log_level: str = "INFO"
    max_workers: int = 4

    class Config:
        env_prefix = "THIRRING_"
        env_file = ".env"
        env_file_encoding = "utf-8"
        extra = "ignore"  # Allow extra fields from environment

    def band_tolerance(self, n_sites: int) -> float:
        """Default delta_band for a ring of n_sites sites."""
        return self.band_tolerance_scale * 2.0 * math.pi / n_sites


# Create global settings instance
settings = Settings()
