import math
import random

import pytest

from sturmkit.arith import factorize, is_prime
from sturmkit.gaussint import (
    GaussianInt,
    canonical_associate,
    g_divmod,
    g_factor,
    g_gcd,
    is_g_prime,
    parse_gaussian,
    two_squares,
    UNITS,
)


def brute_two_squares(n):
    best = None
    a = 0
    while a * a * 2 <= n:
        b2 = n - a * a
        b = math.isqrt(b2)
        if b * b == b2:
            cand = (a, b)
            if best is None or cand < best:
                best = cand
        a += 1
    return best


def all_gaussians_with_norm_at_most(limit):
    bound = math.isqrt(limit)
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            z = GaussianInt(a, b)
            if 0 < z.norm() <= limit:
                yield z


class TestParsing:
    def test_round_trips(self):
        for s in ("3", "-2", "i", "-i", "2i", "-5i", "1+2i", "1-2i", "-3+4i", "0"):
            z = parse_gaussian(s)
            assert parse_gaussian(str(z)) == z

    def test_values(self):
        assert parse_gaussian("7+5i") == GaussianInt(7, 5)
        assert parse_gaussian("-i") == GaussianInt(0, -1)
        assert parse_gaussian(" 4 ") == GaussianInt(4, 0)

    def test_rejects_garbage(self):
        for s in ("", "x", "1+2j", "2+i3"):
            with pytest.raises(ValueError):
                parse_gaussian(s)


class TestDivmod:
    def test_worked_example(self):
        q, r = g_divmod(GaussianInt(7, 5), GaussianInt(1, 2))
        assert q == GaussianInt(3, -2)
        assert r == GaussianInt(0, 1)
        assert r.norm() == 1 < 5

    def test_exact_division(self):
        q, r = g_divmod(GaussianInt(5, 0), GaussianInt(1, 2))
        assert r.is_zero()
        assert q == GaussianInt(1, -2)

    def test_unit_divisor(self):
        a = GaussianInt(9, -4)
        q, r = g_divmod(a, GaussianInt(1, 0))
        assert (q, r) == (a, GaussianInt(0, 0))

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            g_divmod(GaussianInt(1, 1), GaussianInt(0, 0))

    def test_remainder_norm_contract(self):
        rng = random.Random(99)
        for _ in range(2000):
            a = GaussianInt(rng.randint(-1000, 1000), rng.randint(-1000, 1000))
            b = GaussianInt(rng.randint(-1000, 1000), rng.randint(-1000, 1000))
            if b.is_zero():
                continue
            q, r = g_divmod(a, b)
            assert a == q * b + r
            assert 2 * r.norm() <= b.norm()


class TestCanonical:
    def test_norm_two(self):
        for u in UNITS:
            assert canonical_associate(u * GaussianInt(1, 1)) == GaussianInt(1, 1)

    def test_unique_in_associate_class(self):
        for z in all_gaussians_with_norm_at_most(100):
            canon = canonical_associate(z)
            assert canon.re > 0 and -canon.re < canon.im <= canon.re
            assert {canonical_associate(u * z) for u in UNITS} == {canon}


class TestGcd:
    def test_examples(self):
        assert g_gcd(GaussianInt(1, 1), GaussianInt(2, 0)) == GaussianInt(1, 1)
        assert g_gcd(GaussianInt(3, 0), GaussianInt(5, 0)) == GaussianInt(1, 0)
        z = GaussianInt(-3, 4)
        assert g_gcd(z, GaussianInt(0, 0)) == canonical_associate(z)

    def test_both_zero(self):
        with pytest.raises(ValueError):
            g_gcd(GaussianInt(0, 0), GaussianInt(0, 0))

    def test_divides_both(self):
        rng = random.Random(5)
        for _ in range(500):
            a = GaussianInt(rng.randint(-50, 50), rng.randint(-50, 50))
            b = GaussianInt(rng.randint(-50, 50), rng.randint(-50, 50))
            if a.is_zero() and b.is_zero():
                continue
            g = g_gcd(a, b)
            assert g_divmod(a, g)[1].is_zero()
            assert g_divmod(b, g)[1].is_zero()

    def test_common_divisor_divides_gcd(self):
        rng = random.Random(6)
        for _ in range(300):
            d = GaussianInt(rng.randint(-5, 5), rng.randint(-5, 5))
            if d.is_zero():
                continue
            a = d * GaussianInt(rng.randint(-6, 6), rng.randint(-6, 6))
            b = d * GaussianInt(rng.randint(-6, 6), rng.randint(-6, 6))
            if a.is_zero() and b.is_zero():
                continue
            g = g_gcd(a, b)
            assert g_divmod(g, d)[1].is_zero()


def brute_is_prime(z):
    n = z.norm()
    for d in all_gaussians_with_norm_at_most(n - 1):
        if d.norm() <= 1:
            continue
        if g_divmod(z, d)[1].is_zero():
            return False
    return True


class TestPrimality:
    def test_examples(self):
        assert is_g_prime(GaussianInt(3, 0))
        assert not is_g_prime(GaussianInt(5, 0))
        assert is_g_prime(GaussianInt(1, 1))

    def test_rejects_units_and_zero(self):
        with pytest.raises(ValueError):
            is_g_prime(GaussianInt(0, 0))
        with pytest.raises(ValueError):
            is_g_prime(GaussianInt(0, -1))

    def test_rational_primes_3_mod_4(self):
        for p in range(3, 500, 4):
            if is_prime(p):
                assert is_g_prime(GaussianInt(p, 0))
                assert is_g_prime(GaussianInt(0, -p))

    def test_brute_agreement(self):
        for z in all_gaussians_with_norm_at_most(200):
            if z.norm() == 1:
                continue
            assert is_g_prime(z) == brute_is_prime(z)


class TestFactor:
    def test_five(self):
        fac = g_factor(GaussianInt(5, 0))
        assert fac.unit == GaussianInt(1, 0)
        assert fac.factors == (
            (GaussianInt(2, -1), 1),
            (GaussianInt(2, 1), 1),
        )

    def test_two(self):
        fac = g_factor(GaussianInt(2, 0))
        assert fac.factors == ((GaussianInt(1, 1), 2),)
        assert fac.unit == GaussianInt(0, -1)

    def test_unit_input(self):
        fac = g_factor(GaussianInt(0, 1))
        assert fac.unit == GaussianInt(0, 1)
        assert fac.factors == ()

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            g_factor(GaussianInt(0, 0))

    def test_reconstruction_and_primality(self):
        for z in all_gaussians_with_norm_at_most(2000):
            fac = g_factor(z)
            assert fac.value() == z
            assert fac.unit.is_unit()
            for pi, e in fac.factors:
                assert e >= 1
                assert pi == canonical_associate(pi)
                assert is_g_prime(pi)

    def test_factoriality(self):
        # if a prime divides a product it divides a factor
        rng = random.Random(13)
        primes = [GaussianInt(1, 1), GaussianInt(2, 1), GaussianInt(2, -1),
                  GaussianInt(3, 0), GaussianInt(3, 2), GaussianInt(7, 0)]
        for _ in range(400):
            pi = rng.choice(primes)
            a = GaussianInt(rng.randint(-20, 20), rng.randint(-20, 20))
            b = GaussianInt(rng.randint(-20, 20), rng.randint(-20, 20))
            if a.is_zero() or b.is_zero():
                continue
            if g_divmod(a * b, pi)[1].is_zero():
                assert (
                    g_divmod(a, pi)[1].is_zero()
                    or g_divmod(b, pi)[1].is_zero()
                )


class TestTwoSquares:
    def test_examples(self):
        assert two_squares(13) == (2, 3)
        assert two_squares(5) == (1, 2)
        assert two_squares(21) is None
        assert two_squares(1) == (0, 1)
        assert two_squares(2) == (1, 1)

    def test_lexicographically_smallest(self):
        for n in range(1, 500):
            assert two_squares(n) == brute_two_squares(n)

    def test_condition_iff(self):
        # representable iff every prime 3 mod 4 has even exponent
        for n in range(1, 2001):
            ok = all(
                e % 2 == 0
                for p, e in factorize(n).factors
                if p % 4 == 3
            )
            assert (two_squares(n) is not None) == ok

    def test_prime_uniqueness(self):
        # p = 1 (mod 4): exactly one representation up to order and sign
        for p in range(5, 1001, 4):
            if not is_prime(p):
                continue
            reps = set()
            a = 0
            while 2 * a * a <= p:
                b2 = p - a * a
                b = math.isqrt(b2)
                if b * b == b2:
                    reps.add((a, b))
                a += 1
            assert len(reps) == 1
            assert two_squares(p) == reps.pop()


class TestOtherQuadraticRings:
    def test_z_sqrt_minus_3_not_norm_euclidean(self):
        # In Z[sqrt(-3)] with N(x + y*sqrt(-3)) = x^2 + 3y^2, dividing
        # a = 1 + sqrt(-3) by b = 2 admits no quotient k with
        # N(a - k*b) < N(b): the minimum over a search box is exactly 4.
        def norm(x, y):
            return x * x + 3 * y * y

        a = (1, 1)
        b = (2, 0)
        best = min(
            norm(a[0] - 2 * kx, a[1] - 2 * ky)
            for kx in range(-10, 11)
            for ky in range(-10, 11)
        )
        assert best == norm(*b) == 4
