"""Exact integer arithmetic: extended gcd, factorization, Euler phi.

Plain Python ints are the arbitrary-precision integers used everywhere in
this package, and ``fractions.Fraction`` (always reduced, denominator > 0)
is the exact rational type.  All functions here are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# Deterministic Miller-Rabin witness set, valid for every n < 3.3e24.
# The library targets desk-scale inputs (< 2**64), so this is a strict
# primality test, not a probabilistic one.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Trial division handles factors up to this bound; anything left is split
# with Pollard rho after a primality check.
_TRIAL_LIMIT = 10**6


def gcd_ext(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return (g, x, y) with a*x + b*y = g = gcd(a, b).

    g is always >= 1; gcd_ext(0, 0) is a domain error rather than 0, so a
    zero gcd can never silently reach order or phi computations.
    """
    if a == 0 and b == 0:
        raise ValueError("gcd_ext(0, 0) is undefined")
    old_r, r = abs(a), abs(b)
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    x = old_s if a >= 0 else -old_s
    y = old_t if b >= 0 else -old_t
    return old_r, x, y


def solve_linear_diophantine(
    a: int, b: int, c: int
) -> tuple[int, int, int, int] | None:
    """Solve a*x + b*y = c over the integers.

    Returns (x0, y0, dx, dy) such that the full solution set is
    {(x0 + t*dx, y0 + t*dy) : t in Z}, or None when gcd(a, b) does not
    divide c.  The step vector is normalized so its first nonzero
    component is positive.
    """
    g, x, y = gcd_ext(a, b)
    if c % g:
        return None
    k = c // g
    dx, dy = b // g, -(a // g)
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    return x * k, y * k, dx, dy


def is_prime(n: int) -> bool:
    """Deterministic primality test (trial division + strong pseudoprime)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FactoredInt:
    """Canonical factorization sign * prod(p**e), primes strictly increasing."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        n = self.sign
        for p, e in self.factors:
            n *= p**e
        return n


def _pollard_rho(n: int) -> int:
    """Some nontrivial factor of an odd composite n.

    The parameter c is swept deterministically, so factorize() always
    returns the same result for the same input.
    """
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def factorize(n: int) -> FactoredInt:
    """Canonical factorization of n != 0 (deterministic)."""
    if n == 0:
        raise ValueError("cannot factorize 0")
    sign = 1 if n > 0 else -1
    m = abs(n)
    counts: dict[int, int] = {}
    for p in (2, 3, 5):
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    f = 7
    while f * f <= m and f <= _TRIAL_LIMIT:
        while m % f == 0:
            counts[f] = counts.get(f, 0) + 1
            m //= f
        f += 2
    stack = [m] if m > 1 else []
    while stack:
        v = stack.pop()
        if is_prime(v):
            counts[v] = counts.get(v, 0) + 1
        else:
            d = _pollard_rho(v)
            stack.append(d)
            stack.append(v // d)
    return FactoredInt(sign, tuple(sorted(counts.items())))


def euler_phi(n: int) -> int:
    """Count of 1..n coprime to n, via (p-1)*p**(e-1) over the factorization."""
    if n < 1:
        raise ValueError("euler_phi requires n >= 1")
    if n == 1:
        return 1
    result = 1
    for p, e in factorize(n).factors:
        result *= (p - 1) * p ** (e - 1)
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of n != 0, sorted ascending."""
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def valuation(n: int, p: int) -> int:
    """Largest k with p**k dividing n (n != 0, p >= 2)."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    if p < 2:
        raise ValueError("valuation base must be >= 2")
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def format_rational(q: Fraction) -> str:
    """Serialize a rational as "num/den", or just "num" for integers."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    """Parse "num" or "num/den" into an exact Fraction."""
    s = s.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(s))
