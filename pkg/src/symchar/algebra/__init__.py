"""Exact arithmetic substrate: rationals, polynomials, truncated series."""

from .multipoly import MultiPoly, var
from .rational import Rational, format_rational, parse_rational, to_rational
from .ratfunc import RationalFunction
from .series import (
    LaurentSeries,
    PowerSeries,
    direct_coefficient,
    extract_coefficient,
    lagrange_modified,
    series_multiply,
    series_reciprocal,
    shift_substitute,
)

__all__ = [
    "MultiPoly",
    "var",
    "Rational",
    "format_rational",
    "parse_rational",
    "to_rational",
    "RationalFunction",
    "LaurentSeries",
    "PowerSeries",
    "direct_coefficient",
    "extract_coefficient",
    "lagrange_modified",
    "series_multiply",
    "series_reciprocal",
    "shift_substitute",
]
