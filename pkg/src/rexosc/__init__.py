"""Exact algebra of rational extensions of the quantum harmonic oscillator:
Maya diagrams, pseudo-Wronskians, ladder operators and coherent states."""

__version__ = "0.1.0"
