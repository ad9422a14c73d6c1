"""
########################################################################
# Thirring Automaton Spectral Toolkit - services/__init__.py
#
# Origin: Created as part of the Thirring Automaton Spectral Toolkit
# Request: Two-particle spectral theory of the Thirring cellular automaton
# Version: 1.0.0
# Created: 2025-04-27
#
# Purpose: Services package initialization
#
# Dependencies: None
########################################################################
"""
# Import services to make them available when importing the package
from src.services.spectrum_service import SpectrumService
from src.services.analytic_service import AnalyticSpectrumService
from src.services.oracle_service import OracleSpectrumService
from src.services.sweep_service import SweepService

__all__ = ['SpectrumService', 'AnalyticSpectrumService', 'OracleSpectrumService', 'SweepService']
