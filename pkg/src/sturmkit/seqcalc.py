"""Finite-difference calculus on polynomial sequences.

A sequence a_n = P(n) is represented by its polynomial P; delta is
a_{n+1} - a_n and sigma is the running sum a_1 + ... + a_n, pinned by
S(0) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .polyq import Poly, shift_poly

_Q = Fraction


def delta(f: Poly) -> Poly:
    """Difference polynomial Q(n) = P(n+1) - P(n); drops the degree by one."""
    return shift_poly(f, 1) - f


def kth_difference(f: Poly, k: int) -> Poly:
    """k-fold delta; zero exactly when deg P <= k - 1."""
    if k < 0:
        raise ValueError("k must be >= 0")
    for _ in range(k):
        f = delta(f)
    return f


def sigma_poly(f: Poly) -> Poly:
    """Summation polynomial S with S(n) = P(1) + ... + P(n) and S(0) = 0.

    S has degree deg P + 1 and satisfies delta(S)(n) = P(n+1) exactly.
    """
    d = f.degree
    if d < 0:
        return Poly()
    points = [(_Q(0), _Q(0))]
    acc = _Q(0)
    for j in range(1, d + 3):
        acc += f(j)
        points.append((_Q(j), acc))
    return _interpolate(points)


def _interpolate(points: list[tuple[Fraction, Fraction]]) -> Poly:
    # Newton's divided differences, exact over Q.
    xs = [x for x, _ in points]
    table = [y for _, y in points]
    n = len(points)
    coeffs = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(n - level)
        ]
        coeffs.append(table[0])
    result = Poly()
    basis = Poly([1])
    for k, c in enumerate(coeffs):
        result = result + basis * c
        basis = basis * Poly([-xs[k], 1])
    return result


@dataclass(frozen=True)
class PolynomialFit:
    """Result of detect_polynomial.

    polynomial is None when the difference table never stabilized to zero;
    candidate is always the interpolant through all the samples.
    """

    polynomial: Poly | None
    candidate: Poly


def detect_polynomial(samples) -> PolynomialFit:
    """Recover P from samples P(1), ..., P(m) when they are polynomial.

    The difference table must reach an all-zero row with at least two
    trailing zero rows before the samples run out; a single coincidental
    zero row at the very end is not trusted.
    """
    values = [_Q(s) for s in samples]
    if not values:
        raise ValueError("need at least one sample")
    m = len(values)
    # Newton forward form from the top diagonal of the difference table:
    # P(n) = sum_j D_j * C(n-1, j) with D_j the leading j-th difference.
    diagonal = []
    row = values
    zero_from = None
    level = 0
    while row:
        diagonal.append(row[0])
        if zero_from is None and all(v == 0 for v in row):
            zero_from = level
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        level += 1
    candidate = Poly()
    basis = Poly([1])
    for j, d in enumerate(diagonal):
        candidate = candidate + basis * (d / factorial(j))
        basis = basis * Poly([-1 - j, 1])
    accepted = zero_from is not None and zero_from <= m - 2
    return PolynomialFit(candidate if accepted else None, candidate)
