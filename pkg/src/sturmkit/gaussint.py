"""Gaussian integers: Euclidean division, gcd, primes, two squares.

The norm N(a + bi) = a**2 + b**2 is multiplicative, which is what makes
the Euclidean algorithm and unique factorization work in Z[i].
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .arith import factorize, is_prime
from .quadres import sqrt_mod


@dataclass(frozen=True)
class GaussianInt:
    re: int
    im: int

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.im > 0:
            imag = "i" if self.im == 1 else f"{self.im}i"
            return imag if self.re == 0 else f"{self.re}+{imag}"
        imag = "-i" if self.im == -1 else f"{self.im}i"
        return imag if self.re == 0 else f"{self.re}{imag}"


ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)
UNITS = (ONE, -ONE, I, -I)

_GAUSS_RE = re.compile(
    r"^\s*(?P<re>[+-]?\d+)?\s*(?P<im>[+-]?\d*)\s*(?P<i>i)?\s*$"
)


def parse_gaussian(s: str) -> GaussianInt:
    """Parse "a+bi" / "a-bi" with either part optional, e.g. "3", "-i", "1-2i"."""
    m = _GAUSS_RE.match(s.strip())
    if not m or (m.group("im") and not m.group("i")):
        raise ValueError(f"cannot parse Gaussian integer: {s!r}")
    if m.group("i"):
        raw = m.group("im") or ""
        if raw in ("", "+"):
            im = 1
        elif raw == "-":
            im = -1
        else:
            im = int(raw)
        re_part = int(m.group("re")) if m.group("re") else 0
        return GaussianInt(re_part, im)
    if m.group("re") is None:
        raise ValueError(f"cannot parse Gaussian integer: {s!r}")
    return GaussianInt(int(m.group("re")), 0)


def _round_half_down(n: int, d: int) -> int:
    # Nearest integer to n/d with ties toward -inf; d > 0.
    return (2 * n + d - 1) // (2 * d)


def g_divmod(a: GaussianInt, b: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """Euclidean division: a = q*b + r with norm(r) <= norm(b)/2 < norm(b).

    q is the exact complex quotient rounded coordinatewise to the nearest
    integer, ties toward -inf.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by zero Gaussian integer")
    n = b.norm()
    t = a * b.conjugate()
    q = GaussianInt(_round_half_down(t.re, n), _round_half_down(t.im, n))
    return q, a - q * b


def g_divides(d: GaussianInt, z: GaussianInt) -> bool:
    return g_divmod(z, d)[1].is_zero()


def g_exact_div(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    q, r = g_divmod(a, b)
    if not r.is_zero():
        raise ValueError(f"{b} does not divide {a}")
    return q


def canonical_associate(z: GaussianInt) -> GaussianInt:
    """The associate of z with re > 0 and -re < im <= re.

    Exactly one of z, iz, -z, -iz lands in that half-open cone; for
    diagonal inputs like 1+i this picks the upper diagonal, so norm 2
    canonicalizes to 1+i.
    """
    if z.is_zero():
        raise ValueError("zero has no canonical associate")
    for u in UNITS:
        w = u * z
        if w.re > 0 and -w.re < w.im <= w.re:
            return w
    raise AssertionError("unreachable")


def g_gcd(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    """Canonical gcd in Z[i]; every common divisor divides it."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of (0, 0) is undefined")
    while not b.is_zero():
        a, b = b, g_divmod(a, b)[1]
    return canonical_associate(a)


def is_g_prime(z: GaussianInt) -> bool:
    """Primality in Z[i].

    z is prime iff norm(z) is a rational prime, or z is an associate of a
    rational prime p = 3 (mod 4).
    """
    n = z.norm()
    if n == 0:
        raise ValueError("zero is not classified")
    if n == 1:
        raise ValueError("units are not classified")
    if is_prime(n):
        return True
    if z.re == 0 or z.im == 0:
        p = abs(z.re) if z.im == 0 else abs(z.im)
        return p % 4 == 3 and is_prime(p)
    return False


@dataclass(frozen=True)
class GaussianFactorization:
    """unit * prod(prime**exp) with canonical primes, sorted by (norm, re, im)."""

    unit: GaussianInt
    factors: tuple[tuple[GaussianInt, int], ...]

    def value(self) -> GaussianInt:
        z = self.unit
        for pi, e in self.factors:
            for _ in range(e):
                z = z * pi
        return z


def _prime_above(p: int) -> GaussianInt:
    # A canonical Gaussian prime of norm p, for p = 1 (mod 4).
    x = sqrt_mod(-1, p)[0]
    return g_gcd(GaussianInt(p, 0), GaussianInt(x, 1))


def g_factor(z: GaussianInt) -> GaussianFactorization:
    """Unique canonical factorization in Z[i]; product reconstructs z."""
    if z.is_zero():
        raise ValueError("cannot factor 0")
    counts: dict[GaussianInt, int] = {}
    w = z
    n = z.norm()
    if n > 1:
        for p, _ in factorize(n).factors:
            if p == 2:
                cands = [GaussianInt(1, 1)]
            elif p % 4 == 3:
                cands = [GaussianInt(p, 0)]
            else:
                pi = _prime_above(p)
                cands = [pi, canonical_associate(pi.conjugate())]
            for pi in cands:
                while g_divides(pi, w):
                    counts[pi] = counts.get(pi, 0) + 1
                    w = g_exact_div(w, pi)
    if not w.is_unit():
        raise AssertionError(f"non-unit cofactor {w} left over")
    ordered = sorted(counts.items(), key=lambda kv: (kv[0].norm(), kv[0].re, kv[0].im))
    return GaussianFactorization(w, tuple(ordered))


def two_squares(n: int) -> tuple[int, int] | None:
    """Lexicographically smallest (a, b) with 0 <= a <= b and a*a + b*b = n.

    Exists iff every prime = 3 (mod 4) divides n to an even power.  Every
    essentially different representation comes from distributing each
    split prime p = pi * conj(pi) between pi and conj(pi), so enumerating
    those choices and taking the minimum is exact.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    fixed = ONE
    split: list[tuple[GaussianInt, int]] = []
    for p, e in factorize(n).factors:
        if p == 2:
            for _ in range(e):
                fixed = fixed * GaussianInt(1, 1)
        elif p % 4 == 3:
            if e % 2:
                return None
            fixed = fixed * GaussianInt(p ** (e // 2), 0)
        else:
            split.append((_prime_above(p), e))
    best: tuple[int, int] | None = None

    def walk(i: int, acc: GaussianInt) -> None:
        nonlocal best
        if i == len(split):
            a, b = sorted((abs(acc.re), abs(acc.im)))
            if best is None or (a, b) < best:
                best = (a, b)
            return
        pi, e = split[i]
        conj = pi.conjugate()
        for j in range(e + 1):
            w = acc
            for _ in range(j):
                w = w * pi
            for _ in range(e - j):
                w = w * conj
            walk(i + 1, w)

    walk(0, fixed)
    return best
