"""Exact computation and rendering of Kraft sums.

The Kraft sum of a code C over an alphabet of size r is the rational
sum of r^-len(w) over the words of C.  All arithmetic and comparison is
exact; decimal output exists only for human-readable reports and is
clearly approximate.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction

from .core import Code


def kraft_sum(code: Code) -> Fraction:
    """The exact Kraft sum of ``code``; the empty code yields 0.

    Accumulates integer numerators over the common denominator
    r^maxlen and reduces once.
    """
    if len(code) == 0:
        return Fraction(0)
    r = code.alphabet.size
    top = code.max_len()
    numerator = sum(r ** (top - len(w)) for w in code)
    return Fraction(numerator, r**top)


def kraft_power(value: Fraction, k: int) -> Fraction:
    """The exact k-th power of a rational value, k >= 1."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    return Fraction(value) ** k


def exact_str(value: Fraction) -> str:
    """Render a rational as ``num/den`` in lowest terms (den always shown)."""
    return f"{value.numerator}/{value.denominator}"


def approx_str(value: Fraction, digits: int = 12) -> str:
    """Decimal approximation to ``digits`` significant digits.

    For reports only; never feed this back into comparisons.
    """
    if value == 0:
        return "0"
    sign = "-" if value < 0 else ""
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(abs(value.numerator)) / Decimal(value.denominator)
    mantissa, exp_text = f"{d:.{digits - 1}e}".split("e")
    exponent = int(exp_text)
    body = mantissa.replace(".", "")
    if 0 <= exponent < digits:
        head, tail = body[: exponent + 1], body[exponent + 1 :]
        text = head + ("." + tail if tail else "")
    elif -4 <= exponent < 0:
        text = "0." + "0" * (-exponent - 1) + body
    else:
        text = f"{body[0]}.{body[1:]}e{exponent:+d}"
    return sign + text
