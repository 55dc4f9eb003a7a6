"""Exact-arithmetic kernel: polynomials, rational and quasi-rational
functions, differential operators, Wronskians and truncated Laurent series."""

from .linalg import bareiss, det, poly_det
from .operators import (
    DiffOperator,
    apply_operator,
    crum_factors,
    expand_factors,
    first_order_apply,
    operator_polynomial,
    wronskian,
    wronskian_operator,
    wronskian_operator_cofactor,
)
from .poly import ONE, X, ZERO, ZERO_DEGREE, Poly, Scalar, gcd, lcm, scalar_to_str, to_scalar
from .rational import QuasiRational, RationalFunction, as_rational
from .series import DEFAULT_TRUNCATION, LaurentSeries

__all__ = [
    "DEFAULT_TRUNCATION",
    "DiffOperator",
    "LaurentSeries",
    "ONE",
    "Poly",
    "QuasiRational",
    "RationalFunction",
    "Scalar",
    "X",
    "ZERO",
    "ZERO_DEGREE",
    "apply_operator",
    "as_rational",
    "bareiss",
    "crum_factors",
    "det",
    "expand_factors",
    "first_order_apply",
    "gcd",
    "lcm",
    "operator_polynomial",
    "poly_det",
    "scalar_to_str",
    "to_scalar",
    "wronskian",
    "wronskian_operator",
    "wronskian_operator_cofactor",
]
