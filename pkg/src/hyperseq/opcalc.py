"""Operator calculus over exact rationals.

Forward differences (computed two independent ways and cross-checked),
the binomial transform pair, exact derivatives at zero of factored
linear forms and of reciprocal rising factorials, leaping binomial
coefficients, terminating hypergeometric sums, and truncated formal
power series for the generating functions.

A term oracle is any pure callable from an integer index to an exact
rational; determinism is the caller's contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import ComputationIntegrityError, DomainError
from .exactnum import binomial_int, factorial, format_rational, rising_factorial

_F = Fraction

TermOracle = Callable[[int], Fraction]


def forward_difference(
    f: TermOracle, k: int, x: int, domain: tuple[int, int] | None = None
) -> Fraction:
    """k-th forward difference of f at x.

    Evaluated both by k-fold iterated first differences and by the
    alternating binomial sum; the two must agree exactly and the common
    value is returned.  A mismatch raises ComputationIntegrityError
    (a bug, not bad input).  ``domain``, when given, is the closed
    interval on which f may be evaluated.
    """
    if k < 0:
        raise DomainError(f"difference order must be >= 0, got {k}")
    if domain is not None and not (domain[0] <= x and x + k <= domain[1]):
        raise DomainError(f"[{x}, {x + k}] is outside the oracle domain {domain}")
    vals = [_F(f(x + i)) for i in range(k + 1)]

    row = vals
    for _ in range(k):
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
    iterated = row[0]

    alternating = sum(
        ((-1) ** (k - i) * binomial_int(k, i) * vals[i] for i in range(k + 1)),
        _F(0),
    )
    if iterated != alternating:
        raise ComputationIntegrityError(
            f"difference algorithms disagree at k={k}, x={x}: "
            f"{iterated} vs {alternating}"
        )
    return iterated


def binomial_transform(b: Sequence) -> list[Fraction]:
    """a_k = sum_i binom(k, i) b_i."""
    b = [_F(v) for v in b]
    return [
        sum((binomial_int(k, i) * b[i] for i in range(k + 1)), _F(0))
        for k in range(len(b))
    ]


def inverse_binomial_transform(a: Sequence) -> list[Fraction]:
    """b_k = sum_i (-1)**(k+i) binom(k, i) a_i; inverse of the transform."""
    a = [_F(v) for v in a]
    return [
        sum(
            ((-1) ** (k + i) * binomial_int(k, i) * a[i] for i in range(k + 1)),
            _F(0),
        )
        for k in range(len(a))
    ]


def derivative_at_zero_linear_factors(a: Iterable, c) -> Fraction:
    """d/dx [ (1/c) * prod_i (x + a_i) ] at x = 0, exactly.

    Equals (prod a_i / c) * sum_i 1/a_i.  Every factor offset and the
    scale must be nonzero.
    """
    c = _F(c)
    if c == 0:
        raise DomainError("scale must be nonzero")
    factors = [_F(v) for v in a]
    if any(v == 0 for v in factors):
        raise DomainError("all factor offsets must be nonzero")
    prod = _F(1)
    recip = _F(0)
    for v in factors:
        prod *= v
        recip += 1 / v
    return prod / c * recip


def derivative_at_zero_reciprocal(a: Iterable, c) -> Fraction:
    """d/dx [ c / prod_i (x + a_i) ] at x = 0, exactly.

    Equals -(c / prod a_i) * sum_i 1/a_i.
    """
    c = _F(c)
    if c == 0:
        raise DomainError("scale must be nonzero")
    factors = [_F(v) for v in a]
    if any(v == 0 for v in factors):
        raise DomainError("all factor offsets must be nonzero")
    prod = _F(1)
    recip = _F(0)
    for v in factors:
        prod *= v
        recip += 1 / v
    return -(c / prod) * recip


def leaping_binomial(x, n: int, m: int) -> Fraction:
    """Leaping binomial coefficient: (1/(n!)**m) * prod_{i=1..n} (x + i**m).

    Reduces to the ordinary binomial binom(x+n, n) at m = 1, and its
    derivative at x = 0 is the generalized harmonic number of order m.
    """
    if n < 1 or m < 1:
        raise DomainError(f"leaping binomial needs n >= 1 and m >= 1, got ({n}, {m})")
    x = _F(x)
    prod = _F(1)
    for i in range(1, n + 1):
        prod *= x + i**m
    return prod / _F(factorial(n)) ** m


def dx_reciprocal_rising(c, k: int) -> Fraction:
    """Derivative at j = 0 of 1 / (c + j)(c + j + 1)...(c + j + k - 1).

    Equals -(sum_{i<k} 1/(c+i)) / rising(c, k); zero when k = 0.
    """
    if k < 0:
        raise DomainError(f"needs k >= 0, got {k}")
    c = _F(c)
    if k == 0:
        return _F(0)
    s = _F(0)
    for i in range(k):
        if c + i == 0:
            raise DomainError(f"pole at i={i} in the rising factorial of {c}")
        s += 1 / (c + i)
    return -s / rising_factorial(c, k)


def hypergeometric_terminating(a: int, b, c, z) -> Fraction:
    """Terminating hypergeometric sum with nonpositive-integer upper parameter.

    sum_{k=0}^{|a|} rising(a,k) rising(b,k) z**k / (rising(c,k) k!),
    exact because rising(a, k) vanishes beyond k = |a|.
    """
    if a > 0:
        raise DomainError(f"upper parameter must be a nonpositive integer, got {a}")
    b = _F(b)
    c = _F(c)
    z = _F(z)
    terms = -a
    for i in range(terms):
        if c + i == 0:
            raise DomainError(f"pole at i={i} in the rising factorial of {c}")
    total = _F(1)
    term = _F(1)
    for k in range(1, terms + 1):
        term *= _F(a + k - 1) * (b + k - 1) * z / ((c + k - 1) * k)
        total += term
    return total


@dataclass(frozen=True)
class PowerSeries:
    """Truncated formal power series with exact rational coefficients.

    Arithmetic never reads beyond the truncation order; sums and
    products truncate to the smaller order of the two operands.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_F(v) for v in self.coeffs))
        if not self.coeffs:
            raise ValueError("a power series needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise DomainError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        order = min(self.order, other.order)
        return PowerSeries(
            tuple(self.coeffs[i] + other.coeffs[i] for i in range(order + 1))
        )

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        order = min(self.order, other.order)
        out = [_F(0)] * (order + 1)
        for i, ci in enumerate(self.coeffs[: order + 1]):
            if ci == 0:
                continue
            for j in range(order + 1 - i):
                cj = other.coeffs[j]
                if cj != 0:
                    out[i + j] += ci * cj
        return PowerSeries(tuple(out))

    def scale(self, s) -> "PowerSeries":
        s = _F(s)
        return PowerSeries(tuple(s * c for c in self.coeffs))

    def to_json_list(self) -> list[str]:
        """Coefficients as canonical rational strings, index = exponent."""
        return [format_rational(c) for c in self.coeffs]


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a * b


def ps_coeff(series: PowerSeries, n: int) -> Fraction:
    return series.coeff(n)


def log_series(order: int) -> PowerSeries:
    """-ln(1-z) truncated: coefficient k is 1/k (0 at k = 0).

    Coefficients are emitted directly; no analytic logarithm is involved.
    """
    return PowerSeries(tuple(_F(0) if k == 0 else _F(1, k) for k in range(order + 1)))


def geom_power_series(r: int, order: int) -> PowerSeries:
    """(1-z)**(-r) truncated: coefficient k is binom(k+r-1, k)."""
    if r < 0:
        raise DomainError(f"needs r >= 0, got {r}")
    return PowerSeries(
        tuple(_F(binomial_int(k + r - 1, k)) for k in range(order + 1))
    )


def gf_hyperharmonic(r: int, order: int) -> PowerSeries:
    """Truncation of -ln(1-z)/(1-z)**r; coefficient n is h(n, r)."""
    if r < 1:
        raise DomainError(f"needs r >= 1, got {r}")
    return log_series(order) * geom_power_series(r, order)


def gf_harmonic(order: int) -> PowerSeries:
    """Truncation of -ln(1-z)/(1-z); coefficient n is H(n)."""
    return gf_hyperharmonic(1, order)


def gf_beta(r: int, order: int) -> PowerSeries:
    """Truncation of 1/(r (1-z)**r); coefficient k is beta(k, r)."""
    if r < 1:
        raise DomainError(f"needs r >= 1, got {r}")
    return geom_power_series(r, order).scale(_F(1, r))


def gf_alpha(r: int, order: int) -> PowerSeries:
    """Truncation of z/(1-z) - r ln(1-z); coefficient k >= 1 is alpha(k, r)."""
    if r < 0:
        raise DomainError(f"needs r >= 0, got {r}")
    geom_minus_one = PowerSeries(
        tuple(_F(0) if k == 0 else _F(1) for k in range(order + 1))
    )
    return geom_minus_one + log_series(order).scale(r)
