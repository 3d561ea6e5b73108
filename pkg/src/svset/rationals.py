"""Exact rational parsing and printing.

All grades in this package are `fractions.Fraction` values.  Input documents
may write them either as decimal strings ("0.65") or as slash fractions
("13/20"); both parse to the same exact value.  Printing prefers the decimal
form when it is exact (denominator of the form 2^a * 5^b) and falls back to
lowest-terms "num/den" otherwise.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadDocumentError


def parse_rational(text: str | int | float | Fraction) -> Fraction:
    """Parse a rational from a decimal or "num/den" string, exactly.

    Floats are rejected: they have already lost exactness upstream.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise BadDocumentError(f"expected a rational, got boolean {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        raise BadDocumentError(
            f"refusing float {text!r}: pass rationals as strings to stay exact"
        )
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise BadDocumentError(f"cannot parse rational from {text!r}") from exc


def _is_decimal_exact(q: Fraction) -> bool:
    d = q.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    return d == 1


def format_rational(q: Fraction) -> str:
    """Render a rational as an exact decimal when possible, else "num/den"."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    if _is_decimal_exact(q):
        # scale to a power of ten and place the point by hand
        exp = 0
        d = q.denominator
        while d % 2 == 0:
            d //= 2
            exp += 1
        twos = exp
        exp = 0
        while d % 5 == 0:
            d //= 5
            exp += 1
        digits = max(twos, exp)
        scaled = q.numerator * 10**digits // q.denominator
        sign = "-" if scaled < 0 else ""
        text = str(abs(scaled)).rjust(digits + 1, "0")
        return f"{sign}{text[:-digits]}.{text[-digits:]}"
    return f"{q.numerator}/{q.denominator}"


def split_top_level(text: str) -> list[str]:
    """Split on commas that are not nested inside parentheses or brackets."""
    parts: list[str] = []
    depth = 0
    current: list[str] = []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise BadDocumentError(f"unbalanced brackets in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise BadDocumentError(f"unbalanced brackets in {text!r}")
    parts.append("".join(current).strip())
    return parts
