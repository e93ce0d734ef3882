"""Exact rational arithmetic helpers.

Averages and priority scores are kept as :class:`fractions.Fraction`
internally; rounding to two decimals happens only at documented hand-off
points (display strings and the capability value fed into the priority
formula). Rounding is half-up, matching the worked examples.
"""

import math
from fractions import Fraction


def round_half_up(value: Fraction, digits: int = 2) -> Fraction:
    """Round a rational half-up to ``digits`` decimal places, exactly."""
    scale = 10 ** digits
    scaled = Fraction(value) * scale
    if scaled >= 0:
        n = math.floor(scaled + Fraction(1, 2))
    else:
        n = -math.floor(-scaled + Fraction(1, 2))
    return Fraction(n, scale)


def display(value: Fraction, digits: int = 2) -> str:
    """Render a rational as a fixed-point string, half-up."""
    rounded = round_half_up(value, digits)
    scale = 10 ** digits
    n = abs(rounded.numerator * scale // rounded.denominator)
    sign = "-" if rounded < 0 else ""
    return f"{sign}{n // scale}.{n % scale:0{digits}d}"


def parse_decimal(text: str) -> Fraction:
    """Parse a decimal string ("2.57") into an exact Fraction."""
    return Fraction(str(text).strip())


def to_doc(value: Fraction) -> dict:
    """Serialize a rational as {num, den, display} for storage and the wire."""
    f = Fraction(value)
    return {"num": f.numerator, "den": f.denominator, "display": display(f)}


def from_doc(doc: dict) -> Fraction:
    return Fraction(doc["num"], doc["den"])
