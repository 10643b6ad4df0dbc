"""Exact arithmetic substrate: scalars, polynomials, differential operators."""

from .scalar import I, ONE, ZERO, ScalarExpr, as_scalar, param, params

__all__ = ["I", "ONE", "ZERO", "ScalarExpr", "as_scalar", "param", "params"]
