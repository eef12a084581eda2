"""Constructibility of regular n-gons and Lagrange resolvent certificates.

gauss_constructible decides the 2^a * (distinct Fermat primes) predicate
with factorization evidence.  lagrange_resolvents numerically evaluates
the resolvents T_r at the p-th root of unity and certifies that each
T_r^(p-1) lies in the integer lattice Z[beta], beta the (p-1)-th root of
unity: the (p-1)-th power is expanded in exact exponent arithmetic
(x-exponents mod p, beta-exponents mod p-1), whose coefficients are
integers by construction, and the numeric value of T_r^(p-1) is then
checked against that lattice element.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .arith import FactoredInt, factorize, gcd_ext, is_prime
from .modular import find_primitive_root

RESOLVENT_PRIMES = (3, 5, 17, 257)
LATTICE_TOL = 1e-6  # numeric-vs-lattice disagreement budget (relative)
RECONSTRUCTION_TOL = 1e-9
COMPOSE_TOL = 1e-12

FAILURE_NON_FERMAT = "non-Fermat odd prime"
FAILURE_REPEATED = "repeated odd prime"


def is_fermat_prime(p: int) -> bool:
    """True iff p = 2**(2**s) + 1 for some s >= 0 and p is prime."""
    if p < 3:
        return False
    m = p - 1
    if m & (m - 1):
        return False  # p - 1 is not a power of two
    e = m.bit_length() - 1
    if e < 1 or (e & (e - 1)):
        return False  # the exponent is not itself a power of two
    return is_prime(p)


@dataclass(frozen=True)
class ConstructibilityVerdict:
    n: int
    constructible: bool
    factorization: FactoredInt
    fermat_primes: tuple[int, ...]
    failure_reason: str | None
    offending_prime: int | None


def gauss_constructible(n: int) -> ConstructibilityVerdict:
    """Is the regular n-gon constructible (n = 2^a * distinct Fermat primes)?

    A repeated odd prime is reported before a non-Fermat one when both
    obstructions are present.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    fac = factorize(n)
    odd = [(p, e) for p, e in fac.factors if p != 2]
    for p, e in odd:
        if e > 1:
            return ConstructibilityVerdict(
                n, False, fac, (), FAILURE_REPEATED, p
            )
    for p, _ in odd:
        if not is_fermat_prime(p):
            return ConstructibilityVerdict(
                n, False, fac, (), FAILURE_NON_FERMAT, p
            )
    return ConstructibilityVerdict(
        n, True, fac, tuple(p for p, _ in odd), None, None
    )


def epsilon_compose(m: int, n: int) -> tuple[int, int]:
    """Bezout pair (x, y) with n*x + m*y = 1, so e_m^x * e_n^y = e_mn.

    The defining identity is verified numerically to 1e-12 before
    returning.
    """
    g, x, y = gcd_ext(n, m)
    if g != 1:
        raise ValueError(f"{m} and {n} are not coprime")
    lhs = _cis(x, m) * _cis(y, n)
    if abs(lhs - _cis(1, m * n)) > COMPOSE_TOL:
        raise ArithmeticError("Bezout pair failed the numeric identity check")
    return x, y


def _cis(k: int, n: int) -> complex:
    a = 2.0 * math.pi * (k % n) / n
    return complex(math.cos(a), math.sin(a))


@dataclass(frozen=True)
class ResolventSet:
    """Resolvents T_r(e_p) for r = 0..p-2 plus lattice certificates.

    lattice_coeffs[r] holds the exact integer beta-expansion of
    T_r^(p-1), a_0 - a_1 in the proof's notation, when the full expansion
    was computed (p <= 17); for p = 257 the membership is certified by
    the exact shift identity instead and the entry is None.
    power_errors[r] is the measured relative gap between the numeric
    power and the lattice element (the double-precision headroom).
    """

    p: int
    g: int
    beta: complex
    epsilon: complex
    ts: tuple[complex, ...]
    power_checks: tuple[bool, ...]
    lattice_coeffs: tuple[tuple[int, ...] | None, ...]
    power_errors: tuple[float, ...]
    reconstruction_error: float


def _crt_maps(p: int) -> tuple[int, int, int]:
    # Index (x_exp mod p, beta_exp mod p-1) <-> single index mod p(p-1).
    n1 = p - 1
    big = p * n1
    _, u, _ = gcd_ext(n1, p)  # n1 * u = 1 (mod p)
    _, v, _ = gcd_ext(p, n1)  # p * v = 1 (mod n1)
    a = n1 * (u % p) % big  # 1 mod p, 0 mod n1
    b = p * (v % n1) % big  # 0 mod p, 1 mod n1
    return a, b, big


def _initial_vector(p: int, g: int, r: int) -> list[int]:
    # T_r(x) = sum_j beta^(r*j) * x^(g^j), one unit mass per term.
    n1 = p - 1
    a, b, big = _crt_maps(p)
    vec = [0] * big
    gj = 1
    for j in range(n1):
        vec[(gj * a + (r * j % n1) * b) % big] += 1
        gj = gj * g % p
    return vec


def _cyclic_square(vec: list[int], big: int) -> list[int]:
    out = [0] * big
    nz = [(i, c) for i, c in enumerate(vec) if c]
    for i, ci in nz:
        for j, cj in nz:
            k = i + j
            if k >= big:
                k -= big
            out[k] += ci * cj
    return out


def _power_lattice(p: int, g: int, r: int) -> tuple[bool, tuple[int, ...]]:
    """Exact expansion of T_r^(p-1) mod x^p - 1 over Z[beta].

    Returns (columns_equal, a0_minus_a1): columns_equal is the proof's
    claim that every x-coefficient for exponent >= 1 is the same lattice
    element, and a0_minus_a1 the beta-expansion of T_r^(p-1)(e_p).
    """
    n1 = p - 1
    a, b, big = _crt_maps(p)
    vec = _initial_vector(p, g, r)
    for _ in range(n1.bit_length() - 1):  # p - 1 is a power of two
        vec = _cyclic_square(vec, big)
    cols = [
        tuple(vec[(x * a + be * b) % big] for be in range(n1)) for x in range(p)
    ]
    columns_equal = all(cols[x] == cols[1] for x in range(2, p))
    lattice = tuple(c0 - c1 for c0, c1 in zip(cols[0], cols[1]))
    return columns_equal, lattice


def _shift_identity_holds(p: int, g: int, r: int) -> bool:
    # beta^r * T_r(x^g) has the same exponent representation as T_r(x);
    # by the multiplicative closure argument this certifies that
    # T_r^(p-1) is a Z[beta] element without expanding the power.
    n1 = p - 1
    terms = set()
    shifted = set()
    gj = 1
    for j in range(n1):
        terms.add((gj, r * j % n1))
        shifted.add((gj * g % p, (r * j + r) % n1))
        gj = gj * g % p
    return terms == shifted


def lagrange_resolvents(p: int, slow: bool = False) -> ResolventSet:
    """Resolvent data for p in {3, 5, 17, 257} (257 requires slow=True)."""
    if p not in RESOLVENT_PRIMES:
        raise ValueError(f"supported primes are {RESOLVENT_PRIMES}, got {p}")
    if p == 257 and not slow:
        raise ValueError("p = 257 is gated behind slow=True")
    n1 = p - 1
    g = find_primitive_root(p).value
    beta = _cis(1, n1)
    eps = _cis(1, p)
    g_pows = []
    gj = 1
    for _ in range(n1):
        g_pows.append(gj)
        gj = gj * g % p
    ts = []
    for r in range(n1):
        ts.append(
            sum(_cis(r * j, n1) * _cis(g_pows[j], p) for j in range(n1))
        )
    checks: list[bool] = []
    lattices: list[tuple[int, ...] | None] = []
    errors: list[float] = []
    for r in range(n1):
        if p <= 17:
            cols_equal, lattice = _power_lattice(p, g, r)
            w_num = ts[r] ** n1
            w_lat = sum(c * _cis(k, n1) for k, c in enumerate(lattice))
            err = abs(w_num - w_lat) / max(1.0, abs(w_num))
            checks.append(cols_equal and err <= LATTICE_TOL)
            lattices.append(lattice)
            errors.append(err)
        else:
            checks.append(_shift_identity_holds(p, g, r))
            lattices.append(None)
            errors.append(float("nan"))
    recon = abs(sum(ts) / n1 - eps)
    return ResolventSet(
        p=p,
        g=g,
        beta=beta,
        epsilon=eps,
        ts=tuple(ts),
        power_checks=tuple(checks),
        lattice_coeffs=tuple(lattices),
        power_errors=tuple(errors),
        reconstruction_error=recon,
    )
