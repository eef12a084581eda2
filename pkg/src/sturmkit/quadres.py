"""Quadratic residues: Legendre symbol, modular square roots, counting.

The Legendre symbol is implemented twice on purpose: once by Euler's
criterion and once by a reciprocity ladder with the supplements for 2 and
3.  The two paths are checked against each other in the test suite.
"""

from __future__ import annotations

from .arith import factorize, is_prime


def _check_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, +1} by Euler's criterion.

    a**((p-1)/2) mod p is 1 for residues, p - 1 for non-residues and 0
    when p divides a.
    """
    _check_odd_prime(p)
    ls = pow(a % p, (p - 1) // 2, p)
    return -1 if ls == p - 1 else ls


def legendre_reciprocity(a: int, p: int) -> int:
    """Legendre symbol (a/p) by multiplicativity and the reciprocity ladder.

    The lower argument is factored; prime factors 2 and 3 are resolved by
    the (2/p) = (-1)**((p*p-1)/8) supplement and the mod-12 rule for 3,
    larger primes by flipping with quadratic reciprocity.
    """
    _check_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    result = 1
    for q, e in factorize(a).factors:
        if e % 2:
            result *= _prime_symbol(q, p)
    return result


def _prime_symbol(q: int, p: int) -> int:
    # (q/p) for primes q < p, p odd.
    if q == 2:
        return 1 if p % 8 in (1, 7) else -1
    if q == 3:
        return 1 if p % 12 in (1, 11) else -1
    flip = -1 if (p % 4 == 3 and q % 4 == 3) else 1
    return flip * legendre_reciprocity(p % q, q)


def sqrt_mod(a: int, p: int) -> tuple[int, int] | None:
    """Both solutions of x**2 = a (mod p) as (r, p - r), r <= p - r.

    Returns (0, 0) when p | a and None when a is a non-residue.  Uses the
    p = 3 (mod 4) shortcut a**((p+1)/4) where it applies, Tonelli-Shanks
    otherwise.
    """
    _check_odd_prime(p)
    a %= p
    if a == 0:
        return (0, 0)
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        r = _tonelli_shanks(a, p)
    return (min(r, p - r), max(r, p - r))


def _tonelli_shanks(a: int, p: int) -> int:
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    c = pow(z, q, p)
    x = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i, sq = 0, t
        while sq != 1:
            sq = sq * sq % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return x


def count_residues(p: int) -> tuple[int, int]:
    """(residues, non-residues) mod p, counted from the actual squares."""
    _check_odd_prime(p)
    squares = {x * x % p for x in range(1, p)}
    return len(squares), p - 1 - len(squares)
