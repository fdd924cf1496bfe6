"""Exact renderings of rationals."""

from __future__ import annotations

from fractions import Fraction


def ratio_str(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def decimal_str(value: Fraction, places: int = 12) -> str:
    """Fixed-point rendering rounded half-to-even, computed on integers."""
    value = Fraction(value)
    sign = "-" if value < 0 else ""
    num, den = abs(value.numerator), value.denominator
    q, r = divmod(num * 10**places, den)
    if 2 * r > den or (2 * r == den and q % 2 == 1):
        q += 1
    whole, frac = divmod(q, 10**places)
    if places == 0:
        return f"{sign}{whole}"
    if q == 0:
        sign = ""
    return f"{sign}{whole}.{frac:0{places}d}"
