from __future__ import annotations

import math
from collections.abc import Iterable
from fractions import Fraction

Scalar = int | Fraction


def to_fraction(value: Scalar | str) -> Fraction:
    """Coerce to Fraction. Floats are rejected: they would silently break exactness."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    return Fraction(value)


def parse_rational(text: str | Scalar) -> Fraction:
    """Parse "3/5", "-5" or a plain integer. Surrounding whitespace is ignored. Fractions pass through."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string like '3/5', got {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational {text!r}") from exc


def format_rational(value: Scalar) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def common_denominator(values: Iterable[Fraction]) -> int:
    return math.lcm(1, *(v.denominator for v in values))
