"""Lossless JSON encoding of exact rationals."""

from fractions import Fraction

_SAFE = 2 ** 53


def rational_to_json(q):
    """Integers within 53 bits become JSON numbers, everything else ``"p/q"``."""
    q = Fraction(q)
    if q.denominator == 1 and abs(q.numerator) <= _SAFE:
        return q.numerator
    return f"{q.numerator}/{q.denominator}"


def rational_from_json(value) -> Fraction:
    if isinstance(value, bool):
        raise ValueError("boolean is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational {value!r}") from exc
    raise ValueError(f"bad rational {value!r}; use an integer or a 'p/q' string")
