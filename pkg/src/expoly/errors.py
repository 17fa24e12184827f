"""Exception types raised by the numeric parts of the package."""

from __future__ import annotations


class ExpolyError(Exception):
    """Base class for all package errors."""


class NonConvergenceError(ExpolyError):
    """A series did not meet its stopping criterion within the term cap."""


class RootFindingError(ExpolyError):
    """Root isolation or refinement failed to produce the expected roots."""


class QuadratureError(ExpolyError):
    """Adaptive quadrature could not reach the requested tolerance."""


class PoleError(ExpolyError, ValueError):
    """Gamma function evaluated at a nonpositive integer."""
