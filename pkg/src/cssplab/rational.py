"""Exact rational scalar type shared by every module.

gmpy2's mpq is used when importable (roughly an order of magnitude faster
on the big enumerations), with the stdlib Fraction as fallback. Both are
exact and auto-canonicalizing: positive denominator, gcd(num, den) = 1.
Both print as "p/q", or plain "p" when the denominator is 1.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as Rational

    BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Rational = Fraction
    BACKEND = "fractions"

ZERO = Rational(0)
ONE = Rational(1)

_RAT_TYPE = type(ZERO)


def as_rational(value) -> "Rational":
    """Coerce an int, "p/q" string, Fraction, or Rational to Rational.

    Floats are rejected: nothing in the exact layers may ever round.
    """
    if isinstance(value, (_RAT_TYPE, int)) and not isinstance(value, bool):
        return Rational(value)
    if isinstance(value, (str, Fraction)):
        return Rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rational_from_str(text: str) -> "Rational":
    """Parse "p/q" or "p" (decimal digits, optional leading minus)."""
    try:
        return Rational(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc
