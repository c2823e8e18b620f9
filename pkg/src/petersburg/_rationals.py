"""Exact-rational parsing and formatting shared by the text interfaces."""

from __future__ import annotations

from fractions import Fraction


def format_rational(q: Fraction) -> str:
    """Render as `p/q`, or as a plain decimal integer when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(value) -> Fraction:
    """Coerce an int, Fraction, or string such as ``7`` / ``-3/4`` to a Fraction.

    Floats are rejected on purpose: every quantity in this package is exact.
    """
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise ValueError(f"not a rational: {value!r}")


def rational_json_value(q: Fraction):
    """JSON-friendly form: a plain int when integral, else a `p/q` string."""
    if q.denominator == 1:
        return q.numerator
    return format_rational(q)
