import random
from fractions import Fraction as Q

import pytest

from sturmkit.polyq import Poly, format_poly, parse_poly, shift_poly
from sturmkit.seqcalc import (
    delta,
    detect_polynomial,
    kth_difference,
    sigma_poly,
)


def random_poly(rng, max_degree):
    deg = rng.randint(0, max_degree)
    return Poly(
        [Q(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(deg)]
        + [Q(rng.choice([v for v in range(-9, 10) if v]), 1)]
    )


class TestDelta:
    def test_examples(self):
        assert format_poly(delta(parse_poly("x^2"))) == "2*x + 1"
        assert delta(Poly([7])).is_zero()
        assert format_poly(delta(parse_poly("x^3"))) == "3*x^2 + 3*x + 1"

    def test_degree_drop(self):
        rng = random.Random(31)
        for _ in range(100):
            f = random_poly(rng, 6)
            if f.degree == 0:
                assert delta(f).is_zero()
            else:
                assert delta(f).degree == f.degree - 1

    def test_pointwise(self):
        rng = random.Random(32)
        for _ in range(50):
            f = random_poly(rng, 5)
            d = delta(f)
            for n in range(1, 15):
                assert d(n) == f(n + 1) - f(n)


class TestKthDifference:
    def test_annihilates_low_degree(self):
        f = parse_poly("2*x^3 - x + 5")
        assert kth_difference(f, 4).is_zero()
        assert not kth_difference(f, 3).is_zero()

    def test_top_difference_is_factorial_times_lead(self):
        f = parse_poly("2*x^3 - x + 5")
        top = kth_difference(f, 3)
        assert top == Poly([12])  # 3! * 2
        g = parse_poly("x^5")
        assert kth_difference(g, 5) == Poly([120])

    def test_identity_at_zero(self):
        f = parse_poly("x^2 - x")
        assert kth_difference(f, 0) == f

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            kth_difference(parse_poly("x"), -1)


class TestSigma:
    def test_constant(self):
        assert format_poly(sigma_poly(Poly([1]))) == "x"

    def test_squares(self):
        s = sigma_poly(parse_poly("x^2"))
        # n(n+1)(2n+1)/6
        expected = parse_poly("1/3*x^3 + 1/2*x^2 + 1/6*x")
        assert s == expected
        for n in range(0, 21):
            assert s(n) == sum(k * k for k in range(1, n + 1))

    def test_cubes(self):
        s = sigma_poly(parse_poly("x^3"))
        half = parse_poly("1/2*x^2 + 1/2*x")
        assert s == half * half

    def test_zero_at_zero(self):
        rng = random.Random(33)
        for _ in range(50):
            f = random_poly(rng, 5)
            assert sigma_poly(f)(0) == 0

    def test_direct_summation(self):
        rng = random.Random(34)
        for _ in range(30):
            f = random_poly(rng, 5)
            s = sigma_poly(f)
            acc = Q(0)
            for n in range(1, 51):
                acc += f(n)
                assert s(n) == acc

    def test_delta_sigma_shift_identity(self):
        rng = random.Random(35)
        for _ in range(100):
            f = random_poly(rng, 6)
            assert delta(sigma_poly(f)) == shift_poly(f, 1)

    def test_leibniz(self):
        rng = random.Random(36)
        for _ in range(100):
            f = random_poly(rng, 4)
            g = random_poly(rng, 4)
            lhs = delta(f * g)
            rhs = shift_poly(f, 1) * delta(g) + g * delta(f)
            assert lhs == rhs


class TestDetect:
    def test_squares(self):
        fit = detect_polynomial([1, 4, 9, 16, 25])
        assert fit.polynomial == parse_poly("x^2")

    def test_exponential_rejected(self):
        fit = detect_polynomial([2, 4, 8, 16])
        assert fit.polynomial is None
        # candidate still interpolates the samples
        for n, v in enumerate([2, 4, 8, 16], start=1):
            assert fit.candidate(n) == v

    def test_constant(self):
        fit = detect_polynomial([Q(5, 2)] * 3)
        assert fit.polynomial == Poly([Q(5, 2)])

    def test_zero_sequence(self):
        fit = detect_polynomial([0, 0])
        assert fit.polynomial is not None and fit.polynomial.is_zero()

    def test_single_sample_not_trusted(self):
        assert detect_polynomial([3]).polynomial is None
        assert detect_polynomial([0]).polynomial is None

    def test_needs_two_zero_rows(self):
        # cubic data with exactly 4 samples: the table reaches zero only
        # in the final 1-entry row, which is not enough evidence
        f = parse_poly("x^3")
        fit = detect_polynomial([f(n) for n in range(1, 5)])
        assert fit.polynomial is None
        fit = detect_polynomial([f(n) for n in range(1, 6)])
        assert fit.polynomial == f

    def test_round_trip_random(self):
        rng = random.Random(37)
        for _ in range(100):
            f = random_poly(rng, 4)
            samples = [f(n) for n in range(1, f.degree + 4)]
            fit = detect_polynomial(samples)
            assert fit.polynomial == f

    def test_candidate_always_interpolates(self):
        rng = random.Random(38)
        for _ in range(50):
            samples = [rng.randint(-5, 5) for _ in range(rng.randint(1, 7))]
            fit = detect_polynomial(samples)
            for n, v in enumerate(samples, start=1):
                assert fit.candidate(n) == v

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            detect_polynomial([])
