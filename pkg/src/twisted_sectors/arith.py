"""Exact integer and rational helpers.

Rationals are :class:`fractions.Fraction`, which is always reduced with a
positive denominator. Nothing in this package ever touches a float.
"""

from fractions import Fraction
from math import factorial, gcd
from numbers import Integral

__all__ = [
    "Fraction",
    "rat",
    "frac_part",
    "mod_inverse",
    "multinomial",
    "format_rational",
    "parse_rational",
    "proper_divisors",
]


def _check_int(value, name):
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise ValueError(f"{name} must be an integer, got {value!r}")


def rat(num, den=1):
    """Return the reduced fraction ``num/den``.

    >>> rat(3, -6)
    Fraction(-1, 2)
    """
    _check_int(num, "numerator")
    _check_int(den, "denominator")
    if den == 0:
        raise ValueError("zero denominator")
    return Fraction(int(num), int(den))


def frac_part(x):
    """Fractional part ``x - floor(x)`` of a nonnegative rational."""
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"fractional part is only defined for x >= 0, got {x}")
    return x - (x.numerator // x.denominator)


def mod_inverse(s, N):
    """Inverse of ``s`` modulo ``N``, normalised to ``[1, N-1]``."""
    _check_int(s, "s")
    _check_int(N, "N")
    if N < 2:
        raise ValueError(f"modulus must be >= 2, got {N}")
    r = s % N
    if r == 0 or gcd(r, N) != 1:
        raise ValueError(f"{s} is not invertible modulo {N}")
    # pow(..., -1, N) runs extended Euclid
    return pow(r, -1, N)


def multinomial(n, parts):
    """``n! / prod(p! for p in parts)``; ``parts`` must sum to ``n``."""
    parts = list(parts)
    if n < 0 or any(p < 0 for p in parts):
        raise ValueError("multinomial arguments must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    result = factorial(n)
    for p in parts:
        result //= factorial(p)
    return result


def format_rational(x):
    """Canonical string form: ``"p/q"``, or ``"p"`` when ``q == 1``."""
    return str(Fraction(x))


def parse_rational(text):
    """Parse ``"p/q"``, ``"k"`` or ``"0"`` into an exact rational."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            return rat(int(num), int(den))
        return rat(int(num))
    except (TypeError, ValueError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def proper_divisors(N):
    """Divisors of ``N`` other than ``N`` itself, ascending."""
    return [s for s in range(1, N) if N % s == 0]
