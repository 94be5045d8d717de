"""Exact rational arithmetic and the factorial/binomial primitives.

Every exact value in the package is a ``fractions.Fraction``: an
arbitrary-precision fraction that is always reduced, has a positive
denominator, and represents zero uniquely as 0/1.  The alias
``ExactRational`` names that contract.  On top of it this module provides
the factorial, rising/falling factorial and binomial-coefficient
primitives the sequence and operator modules build on, plus the canonical
``p/q`` text rendering used by the CLI and report files.

Factorials and small binomial coefficients are memoized up to
``MEMO_CAP`` because the identity audit evaluates the same coefficients
millions of times; larger arguments fall through to ``math`` directly.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

ExactRational = Fraction

#: Arguments up to this value are served from the memo caches.
MEMO_CAP = 256

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def make_rational(p: int, q: int = 1) -> Fraction:
    """Build the reduced fraction p/q with a positive denominator.

    Raises ``ZeroDivisionError`` when ``q`` is zero.
    """
    return Fraction(p, q)


def format_rational(x: Fraction) -> str:
    """Canonical text form: ``p/q``, or just ``p`` when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse the canonical rendering, plus an optional leading sign.

    Accepts exactly ``[+-]?digits`` or ``[+-]?digits/digits``; anything
    else (whitespace, decimals, signed denominators) is rejected.
    """
    if not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"not a canonical rational: {text!r}")
    return Fraction(text)


@lru_cache(maxsize=None)
def _factorial_cached(n: int) -> int:
    return math.factorial(n)


def factorial(n: int) -> int:
    """n! for n >= 0, memoized for n <= MEMO_CAP."""
    if n < 0:
        raise ValueError("factorial of a negative integer")
    if n <= MEMO_CAP:
        return _factorial_cached(n)
    return math.factorial(n)


@lru_cache(maxsize=None)
def _comb_cached(n: int, k: int) -> int:
    return math.comb(n, k)


def binomial_int(n: int, k: int) -> int:
    """Integer binomial coefficient with the standard conventions.

    Returns 0 for k < 0 and for k > n >= 0.  A negative upper index is
    defined through the falling-factorial (generalized) binomial, so
    binomial_int(-m, k) == (-1)**k * binomial_int(m + k - 1, k); the
    summation-table rows need those signed values.
    """
    if k < 0:
        return 0
    if n >= 0:
        if k > n:
            return 0
        if n <= MEMO_CAP:
            return _comb_cached(n, k)
        return math.comb(n, k)
    m = k - n - 1
    top = _comb_cached(m, k) if m <= MEMO_CAP else math.comb(m, k)
    return -top if k % 2 else top


def rising_factorial(x, n: int) -> Fraction:
    """x(x+1)...(x+n-1); the empty product (n = 0) is 1."""
    if n < 0:
        raise ValueError("rising factorial needs n >= 0")
    x = Fraction(x)
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def falling_factorial(x, n: int) -> Fraction:
    """x(x-1)...(x-n+1); the empty product (n = 0) is 1."""
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    x = Fraction(x)
    out = Fraction(1)
    for i in range(n):
        out *= x - i
    return out


def binomial_general(x, n: int) -> Fraction:
    """Binomial coefficient with an arbitrary rational upper argument.

    Equals falling_factorial(x, n) / n!; agrees with ``binomial_int`` on
    integer x of either sign.
    """
    return falling_factorial(x, n) / factorial(n)
