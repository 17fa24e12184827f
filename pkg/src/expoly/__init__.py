"""Exponential polynomials, Stirling numbers and Gamma-function Fourier integrals."""

__version__ = "0.1.0"
