"""Exact computations with operator-ordering pyramids.

A pyramid row weights the balanced words ``q^k p^n q^(n-k)`` of the
Heisenberg-Weyl algebra (``qp - pq = i``).  Its image in the commutative
quotient is a polynomial in ``z = (qp + pq)/2``.  The subpackages cover
exact arithmetic, the rewriting engine, the pyramid/polynomial maps,
named families, orthogonality screens, hypergeometric identities and the
type-B Eulerian numbers.
"""

from .exact import GaussRat, TruncSeries, ZPoly, format_gauss, parse_gauss
from .kernels import BACKEND
from .transforms import PreconditionError, PyramidRow, poly_to_pyramid, pyramid_to_poly
from .weyl import ParseError, normal_order, parse_expr, reduce_balanced, reduce_via_interpolation

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "GaussRat",
    "ParseError",
    "PreconditionError",
    "PyramidRow",
    "TruncSeries",
    "ZPoly",
    "format_gauss",
    "normal_order",
    "parse_expr",
    "parse_gauss",
    "poly_to_pyramid",
    "pyramid_to_poly",
    "reduce_balanced",
    "reduce_via_interpolation",
]
