"""Arithmetic in Z_m: residues, orders, primitive roots, discrete logs.

Residues are normalized into [0, m) at construction and arithmetic between
different moduli is a hard error, never a silent coercion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import euler_phi, factorize, gcd_ext, is_prime, valuation


@dataclass(frozen=True)
class Residue:
    """A value in Z_m, m >= 2."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _same_modulus(self, other: "Residue") -> None:
        if self.modulus != other.modulus:
            raise ValueError(
                f"modulus mismatch: {self.modulus} vs {other.modulus}"
            )

    def _lift(self, other: "Residue | int") -> "Residue":
        if isinstance(other, int):
            return Residue(other, self.modulus)
        self._same_modulus(other)
        return other

    def __add__(self, other: "Residue | int") -> "Residue":
        other = self._lift(other)
        return Residue(self.value + other.value, self.modulus)

    def __sub__(self, other: "Residue | int") -> "Residue":
        other = self._lift(other)
        return Residue(self.value - other.value, self.modulus)

    def __mul__(self, other: "Residue | int") -> "Residue":
        other = self._lift(other)
        return Residue(self.value * other.value, self.modulus)

    def __pow__(self, e: int) -> "Residue":
        return mod_pow(self, e)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


@dataclass(frozen=True)
class OrderCertificate:
    """A residue together with its multiplicative order.

    Invariants (checked by the test suite): element**order = 1 and
    element**d != 1 for every proper divisor d of order.
    """

    element: Residue
    order: int


def mod_pow(a: Residue, e: int) -> Residue:
    """a**e mod m by square-and-multiply (e >= 0)."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return Residue(pow(a.value, e, a.modulus), a.modulus)


def mod_inverse(a: Residue) -> Residue | None:
    """b with a*b = 1 (mod m), or None when gcd(a, m) != 1."""
    if a.value == 0:
        return None
    g, x, _ = gcd_ext(a.value, a.modulus)
    if g != 1:
        return None
    return Residue(x, a.modulus)


def multiplicative_order(a: Residue) -> int:
    """Least k >= 1 with a**k = 1 (mod m); requires gcd(a, m) = 1."""
    if math.gcd(a.value, a.modulus) != 1:
        raise ValueError(f"{a.value} is not invertible mod {a.modulus}")
    n = euler_phi(a.modulus)
    order = n
    for p, _ in factorize(n).factors:
        while order % p == 0 and pow(a.value, order // p, a.modulus) == 1:
            order //= p
    return order


def order_certificate(a: Residue) -> OrderCertificate:
    return OrderCertificate(a, multiplicative_order(a))


def is_primitive_root(g: Residue) -> bool:
    """True iff the powers of g exhaust all invertible residues mod m."""
    if math.gcd(g.value, g.modulus) != 1:
        return False
    return multiplicative_order(g) == euler_phi(g.modulus)


def _has_primitive_roots(m: int) -> bool:
    # Primitive roots exist exactly for 2, 4, p**n and 2*p**n, p odd prime.
    if m in (2, 4):
        return True
    fac = factorize(m).factors
    odd = [(p, e) for p, e in fac if p != 2]
    two_exp = next((e for p, e in fac if p == 2), 0)
    return len(odd) == 1 and two_exp <= 1


def find_primitive_root(m: int) -> Residue | None:
    """Smallest primitive root mod m, or None when none exists."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    if m == 2:
        return Residue(1, 2)
    if not _has_primitive_roots(m):
        return None
    phi = euler_phi(m)
    phi_primes = [p for p, _ in factorize(phi).factors]
    for g in range(2, m):
        if math.gcd(g, m) != 1:
            continue
        if all(pow(g, phi // q, m) != 1 for q in phi_primes):
            return Residue(g, m)
    return None  # unreachable: existence is guaranteed above


def count_primitive_roots(p: int) -> int:
    """Number of primitive roots mod a prime p, i.e. phi(p - 1)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    return euler_phi(p - 1)


def discrete_log(a: Residue, b: Residue) -> int | None:
    """Least x >= 0 with a**x = b (mod m), or None.

    Baby-step/giant-step over the order of a, so the cost is
    O(sqrt(ord(a))) multiplications.
    """
    a._same_modulus(b)
    m = a.modulus
    if math.gcd(a.value, m) != 1:
        raise ValueError("discrete_log base must be coprime to the modulus")
    if b.value == 1:
        return 0
    n = multiplicative_order(a)
    s = math.isqrt(n) + 1
    baby: dict[int, int] = {}
    cur = 1
    for j in range(s):
        baby.setdefault(cur, j)
        cur = cur * a.value % m
    # a**(-s) mod m, using a**n = 1
    step = pow(a.value, n - s % n, m) if s % n else 1
    g = b.value
    for i in range(s + 1):
        if g in baby:
            return (i * s + baby[g]) % n
        g = g * step % m
    return None


def lte_valuation(x: int, t: int, p: int) -> int:
    """nu_p(x**t - 1) via lifting the exponent: nu_p(x - 1) + nu_p(t).

    Hypotheses: p prime, x = 1 (mod p), and for p = 2 additionally
    x = 1 (mod 4).  x = 1 itself is rejected (x**t - 1 would be 0).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if t < 1:
        raise ValueError("t must be >= 1")
    if x == 1:
        raise ValueError("x = 1 makes x**t - 1 vanish")
    if (x - 1) % p:
        raise ValueError("requires x = 1 (mod p)")
    if p == 2 and (x - 1) % 4:
        raise ValueError("p = 2 requires x = 1 (mod 4)")
    return valuation(x - 1, p) + valuation(t, p)


def decimal_period(m: int) -> int:
    """Period length of the decimal expansion of 1/m, i.e. ord_m(10)."""
    if m < 2:
        raise ValueError("m must be >= 2")
    if math.gcd(m, 10) != 1:
        raise ValueError("m must be coprime to 10")
    return multiplicative_order(Residue(10, m))


def is_cyclic_order(n: int) -> bool:
    """True iff every group of n permutations is cyclic.

    The criterion is gcd(n, phi(n)) = 1; the test suite validates the
    small cases against an exhaustive enumeration of group tables.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return True
    return math.gcd(n, euler_phi(n)) == 1
