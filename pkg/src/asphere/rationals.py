"""Exact rational scalars and their text form.

All parameter arithmetic in this package runs on `fractions.Fraction`,
which already keeps values in lowest terms with a positive denominator.
This module adds the text format used on the command line and in JSON
output: "p/q" or "p", with an optional leading minus sign.
"""

from fractions import Fraction

__all__ = ["Fraction", "parse_rational", "format_rational", "denominator"]


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact rational.

    A unicode minus sign is accepted alongside the ASCII one.  A zero
    denominator is rejected.
    """
    cleaned = text.strip().replace("−", "-")
    if not cleaned:
        raise ValueError("empty rational literal")
    try:
        return Fraction(cleaned)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in rational literal {text!r}") from None
    except ValueError:
        raise ValueError(f"malformed rational literal {text!r}") from None


def format_rational(q: Fraction) -> str:
    """Render a rational as "p/q", or "p" for integers."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def denominator(q: Fraction) -> int:
    """Denominator of q in lowest terms; integers return 1."""
    return Fraction(q).denominator
