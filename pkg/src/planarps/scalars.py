"""Scalar coefficient domains: exact rationals and complex floating point.

Series carry a tag, ``RATIONAL`` or ``COMPLEX``.  Rational coefficients are
``fractions.Fraction`` and compare exactly; complex coefficients are Python
``complex`` and compare with a relative tolerance (default 1e-9).
"""

from __future__ import annotations

from fractions import Fraction

RATIONAL = "rational"
COMPLEX = "complex"

DEFAULT_TOL = 1e-9


def coerce(value, scalar: str):
    """Bring a number into the given domain; exact->complex loses exactness."""
    if scalar == RATIONAL:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError("rational coefficients need Fraction/int, got %r" % (value,))
    if scalar == COMPLEX:
        return complex(value)
    raise ValueError("unknown scalar domain %r" % (scalar,))


def domain_of(value) -> str:
    if isinstance(value, (Fraction, int)):
        return RATIONAL
    return COMPLEX


def join(scalar_a: str, scalar_b: str) -> str:
    """Common domain of two operands: rational only if both are rational."""
    if scalar_a == RATIONAL and scalar_b == RATIONAL:
        return RATIONAL
    return COMPLEX


def abs_value(value) -> float:
    """Absolute value as a nonnegative float (used for majorants)."""
    return float(abs(value))


def is_zero(value, tol: float = DEFAULT_TOL) -> bool:
    if isinstance(value, Fraction) or isinstance(value, int):
        return value == 0
    return abs(value) <= tol


def approx_eq(a, b, tol: float = DEFAULT_TOL) -> bool:
    """Symmetric relative comparison; exact when both operands are rational."""
    if isinstance(a, (Fraction, int)) and isinstance(b, (Fraction, int)):
        return a == b
    a = complex(a)
    b = complex(b)
    scale = max(1.0, abs(a), abs(b))
    return abs(a - b) <= tol * scale


def format_value(value, scalar: str):
    """JSON form: "p/q" for rationals, {"re": .., "im": ..} for complex."""
    if scalar == RATIONAL:
        v = coerce(value, RATIONAL)
        return "%d/%d" % (v.numerator, v.denominator)
    v = complex(value)
    return {"re": v.real, "im": v.imag}


def parse_value(data, scalar: str):
    if scalar == RATIONAL:
        if isinstance(data, str):
            return Fraction(data)
        if isinstance(data, int):
            return Fraction(data)
        raise ValueError("rational value must be a 'p/q' string, got %r" % (data,))
    if isinstance(data, dict):
        return complex(data["re"], data.get("im", 0.0))
    return complex(data)


def format_decimal(value) -> str:
    """Plain-text complex rendering with 17 significant digits."""
    v = complex(value)
    return "%.17g %.17g" % (v.real, v.imag)
