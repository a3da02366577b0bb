"""Symbolic tensor calculus on Riemannian Z2-manifolds: graded metrics,
Levi-Civita and semi-symmetric non-metric connections, curvature on warped
products, and Einstein classification."""

from .graded import EVEN, ODD, SuperScalar
from .geometry import (Chart, Manifold, VectorField, InvariantViolation,
                       divergence, hessian, lie_bracket)
from .scalars import Assumptions, UndecidedEqualityError, parse_scalar

__version__ = "0.1.0"

__all__ = [
    "EVEN", "ODD", "SuperScalar", "Chart", "Manifold", "VectorField",
    "InvariantViolation", "divergence", "hessian", "lie_bracket",
    "Assumptions", "UndecidedEqualityError", "parse_scalar", "__version__",
]
