"""
########################################################################
# Thirring Automaton Spectral Toolkit - src/__init__.py
#
# Origin: Created as part of the Thirring Automaton Spectral Toolkit
# Request: Two-particle spectral theory of the Thirring cellular automaton
# Version: 1.0.0
# Created: 2025-04-27
#
# Purpose: Main package initialization
#
# Dependencies: None
########################################################################
"""
