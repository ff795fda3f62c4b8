"""JSON encoding conventions: arbitrary-precision values as decimal strings.

Plain JSON numbers lose integers beyond 2^53 in common consumers, so every
value that can grow (exponents, periods, indices, rational parts) is
serialized as a decimal string, and rationals as {"num": ..., "den": ...}.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidInputError


def int_str(x: int) -> str:
    return str(x)


def parse_int(s, what: str = "integer") -> int:
    if isinstance(s, int) and not isinstance(s, bool):
        return s
    if not isinstance(s, str):
        raise InvalidInputError(f"{what} must be a decimal string, got {s!r}")
    try:
        return int(s, 10)
    except ValueError:
        raise InvalidInputError(f"{what} is not a decimal integer: {s!r}") from None


def fraction_obj(q: Fraction) -> dict[str, str]:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def parse_fraction(obj, what: str = "rational") -> Fraction:
    if not isinstance(obj, dict) or set(obj) != {"num", "den"}:
        raise InvalidInputError(f"{what} must be an object with num/den, got {obj!r}")
    num = parse_int(obj["num"], f"{what}.num")
    den = parse_int(obj["den"], f"{what}.den")
    if den <= 0:
        raise InvalidInputError(f"{what}.den must be positive, got {den}")
    return Fraction(num, den)
