"""Exact Apostol-Bernoulli rational functions in the (u, w) basis.

B_r(z, w) is a polynomial in w and u = 1/(z - 1) with rational coefficients.
The recurrence

    B_r = u * sum_{k<r} (-1)^(r-k-1) C(r, k) B_k (z (w-1)^(r-k) - w^(r-k))

is expanded with z*u = u + 1, which keeps every intermediate result in the
(u, w) basis.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterator, Mapping, Tuple, Union

Rational = Union[int, Fraction]
Monomial = Tuple[int, int]  # (power of u, power of w)


class ApostolRational:
    """Immutable polynomial sum c[j, k] * u^j * w^k with Fraction coefficients."""

    __slots__ = ("_r", "_coeffs")

    def __init__(self, r: int, coeffs: Mapping[Monomial, Rational]):
        self._r = r
        self._coeffs: Dict[Monomial, Fraction] = {
            key: Fraction(value) for key, value in coeffs.items() if value != 0
        }

    @property
    def r(self) -> int:
        return self._r

    @property
    def coeffs(self) -> Dict[Monomial, Fraction]:
        """A copy of the nonzero coefficients keyed by (j, k)."""
        return dict(self._coeffs)

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self._coeffs.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ApostolRational):
            return NotImplemented
        return self._r == other._r and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._r, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        return f"ApostolRational(r={self._r}, {render(self)!r})"

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree_u(self) -> int:
        return max((j for j, _ in self._coeffs), default=0)

    def degree_w(self) -> int:
        return max((k for _, k in self._coeffs), default=0)

    def evaluate_exact(self, z: Rational, w: Rational) -> Fraction:
        """Exact value at rational z != 1 and rational w."""
        u = 1 / (Fraction(z) - 1)
        return _horner(self._coeffs, u, Fraction(w))

    def evaluate(self, z: complex, w: complex) -> complex:
        """Floating-point value at z != 1 by nested evaluation in u and w."""
        u = 1.0 / (complex(z) - 1.0)
        return complex(_horner(self._coeffs, u, complex(w)))


def _horner(coeffs: Mapping[Monomial, Fraction], u, w):
    """Nested evaluation, outer in w and inner in u, in the arithmetic of u and w."""
    exact = isinstance(u, Fraction)
    zero = Fraction(0) if exact else 0.0
    if not coeffs:
        return zero
    deg_w = max(k for _, k in coeffs)
    deg_u = max(j for j, _ in coeffs)
    total = zero
    for k in range(deg_w, -1, -1):
        inner = zero
        for j in range(deg_u, -1, -1):
            c = coeffs.get((j, k), Fraction(0))
            inner = inner * u + (c if exact else float(c))
        total = total * w + inner
    return total


def _mul(a: Mapping[Monomial, Fraction], b: Mapping[Monomial, Fraction]) -> Dict[Monomial, Fraction]:
    out: Dict[Monomial, Fraction] = {}
    for (ja, ka), ca in a.items():
        for (jb, kb), cb in b.items():
            key = (ja + jb, ka + kb)
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return {key: c for key, c in out.items() if c != 0}


def _w_minus_one_power(d: int) -> Dict[Monomial, Fraction]:
    return {(0, i): Fraction(comb(d, i) * (-1) ** (d - i)) for i in range(d + 1)}


def _shift_factor(d: int) -> Dict[Monomial, Fraction]:
    """(u + 1)(w - 1)^d - u w^d, which equals u * (z (w-1)^d - w^d)."""
    base = _w_minus_one_power(d)
    out: Dict[Monomial, Fraction] = {}
    for (_, k), c in base.items():
        out[(1, k)] = out.get((1, k), Fraction(0)) + c
        out[(0, k)] = out.get((0, k), Fraction(0)) + c
    out[(1, d)] = out.get((1, d), Fraction(0)) - 1
    return {key: c for key, c in out.items() if c != 0}


@lru_cache(maxsize=None)
def apostol_exact(r: int) -> ApostolRational:
    """Exact B_r(z, w) for z != 1.

    Args:
        r: Nonnegative order

    Returns:
        The ApostolRational for B_r; B_0 is the zero element and B_1 = u

    Raises:
        ValueError: If r is negative
    """
    if r < 0:
        raise ValueError(f"order must be nonnegative, got {r}")
    if r == 0:
        return ApostolRational(0, {})
    if r == 1:
        return ApostolRational(1, {(1, 0): 1})
    acc: Dict[Monomial, Fraction] = {}
    for k in range(1, r):
        lower = apostol_exact(k)
        if lower.is_zero():
            continue
        sign = -1 if (r - k - 1) % 2 else 1
        term = _mul(lower.coeffs, _shift_factor(r - k))
        scale = sign * comb(r, k)
        for key, c in term.items():
            acc[key] = acc.get(key, Fraction(0)) + scale * c
    return ApostolRational(r, acc)


def _format_coefficient(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


def _format_power(symbol: str, power: int) -> str:
    return symbol if power == 1 else f"{symbol}^{power}"


def render(value: ApostolRational) -> str:
    """Canonical text form such as "2·u·w − 2·u − 2·u^2".

    Terms are ordered by w-degree descending, then u-degree ascending.
    """
    if value.is_zero():
        return "0"
    terms = sorted(value.coeffs.items(), key=lambda item: (-item[0][1], item[0][0]))
    parts = []
    for index, ((j, k), c) in enumerate(terms):
        factors = [_format_coefficient(abs(c))]
        if j:
            factors.append(_format_power("u", j))
        if k:
            factors.append(_format_power("w", k))
        body = "·".join(factors)
        if index == 0:
            parts.append(("−" if c < 0 else "") + body)
        else:
            parts.append((" − " if c < 0 else " + ") + body)
    return "".join(parts)
