"""Exact rational carrier and rendering helpers.

All coefficient arithmetic runs on arbitrary-precision rationals that are
always kept in lowest terms with a positive denominator.  The carrier is
``gmpy2.mpq`` when gmpy2 is installed (roughly twice as fast on the long
tables) and ``fractions.Fraction`` otherwise; both satisfy the same
contract and compare equal across types.
"""

from __future__ import annotations

import math
from decimal import Decimal, localcontext
from fractions import Fraction

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Rational = Fraction

RationalLike = object  # Rational, Fraction or int


def is_exact(value) -> bool:
    """True for carriers of exact rational arithmetic (int, Fraction, mpq)."""
    if isinstance(value, (int, Fraction)):
        return True
    return Rational is not Fraction and isinstance(value, Rational)


def as_rational(value) -> "Rational":
    """Coerce ints, Fractions, mpqs, or 'p/q' strings to the active carrier."""
    if isinstance(value, str):
        return Rational(Fraction(value))
    return Rational(value)


def is_reduced(value) -> bool:
    num, den = int(value.numerator), int(value.denominator)
    return den > 0 and math.gcd(abs(num), den) == 1


def rational_str(value) -> str:
    """Canonical 'p/q' form, denominator always written."""
    return f"{int(value.numerator)}/{int(value.denominator)}"


def parse_rational(text: str) -> "Rational":
    """Inverse of rational_str; also accepts plain integers and decimals."""
    return as_rational(text)


def to_decimal_str(value, digits: int = 15) -> str:
    """Fixed-point decimal rendering at `digits` significant digits.

    Rounding is half-even.  Trailing zeros are kept so the digit count is
    explicit, e.g. 1/2 at 4 digits renders as '0.5000'.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    num, den = int(value.numerator), int(value.denominator)
    if num == 0:
        return "0." + "0" * (digits - 1) if digits > 1 else "0"
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(num) / Decimal(den)
        quantum = Decimal(1).scaleb(d.adjusted() - digits + 1)
        d = d.quantize(quantum)
    return format(d, "f")
