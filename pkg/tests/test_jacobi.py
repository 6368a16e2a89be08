"""Tests for the shifted Jacobi layer."""

import random
from fractions import Fraction

import pytest
from numpy.testing import assert_allclose

from dualbern import (
    DomainError,
    WeightParams,
    jacobi_explicit,
    jacobi_norm,
    jacobi_sequence,
    jacobi_value,
)
from dualbern.reference import jacobi_coeffs_exact, weighted_integral_exact

from conftest import agree_digits


def exact_params(alpha, beta):
    # rational weight parameters keep the explicit sum exact end to end
    return WeightParams(Fraction(alpha), Fraction(beta))


class TestWeightParams:
    def test_derived_fields(self):
        p = WeightParams(0.5, 1.5)
        assert p.sigma == 3.0
        assert p.K > 0

    def test_legendre_constant(self):
        assert WeightParams(0.0, 0.0).K == pytest.approx(1.0, rel=1e-14)

    @pytest.mark.parametrize("alpha,beta", [(-1.0, 0.0), (0.0, -1.0), (-2.0, 3.0)])
    def test_rejects_bad_exponents(self, alpha, beta):
        with pytest.raises(DomainError):
            WeightParams(alpha, beta)

    def test_swapped(self):
        p = WeightParams(-0.33, 5.6)
        q = p.swapped()
        assert (q.alpha, q.beta) == (5.6, -0.33)
        assert q.K == pytest.approx(p.K, rel=1e-14)


class TestExplicit:
    def test_degree_zero_is_one(self):
        assert jacobi_explicit(0, WeightParams(0.3, -0.2), 0.77) == 1

    def test_only_constant_term_survives_at_one(self):
        # (1-x) = 0 kills every term but k = 0
        p = WeightParams(0.3, -0.2)
        expected = 1.0
        for l in range(5):
            expected *= (0.3 + 1 + l) / (1 + l)
        assert jacobi_explicit(5, p, 1.0) == pytest.approx(expected, rel=1e-15)

    def test_degree_one_legendre(self):
        p = WeightParams(0.0, 0.0)
        for x in (0.0, 0.25, 0.5, 0.9, 1.0):
            assert jacobi_explicit(1, p, x) == pytest.approx(2 * x - 1, abs=1e-15)

    def test_exact_arithmetic(self):
        p = exact_params(0, 0)
        # shifted Legendre P2(2x-1) at x = 1/2
        assert jacobi_explicit(2, p, Fraction(1, 2)) == Fraction(-1, 2)


class TestSequence:
    def test_single_entry(self):
        seq = jacobi_sequence(0, WeightParams(0.0, 0.0), 0.7)
        assert seq.values == [1.0]

    def test_all_ones_at_right_end_for_alpha_zero(self):
        seq = jacobi_sequence(3, WeightParams(0.0, 0.0), 1.0)
        assert_allclose(seq.values, [1.0] * 4, rtol=1e-14)

    def test_recurrence_matches_exact_explicit_n50(self):
        # the exact-rational explicit sum is the oracle; the float recurrence
        # must track it to 1e-12 relative through degree 50
        pe = exact_params(Fraction(-1, 2), Fraction(-1, 2))
        pf = WeightParams(-0.5, -0.5)
        x = 0.37
        seq = jacobi_sequence(50, pf, x)
        for n in range(51):
            exact = float(jacobi_explicit(n, pe, Fraction(x)))
            assert abs(seq.values[n] - exact) <= 1e-12 * max(1.0, abs(exact))

    @pytest.mark.parametrize("alpha,beta", [(0, 0), (2, 1), (Fraction(1, 3), Fraction(7, 4))])
    def test_recurrence_matches_exact_explicit_n200(self, alpha, beta):
        pe = exact_params(alpha, beta)
        pf = WeightParams(float(Fraction(alpha)), float(Fraction(beta)))
        for x in (0.1, 0.52, 0.93):
            seq = jacobi_sequence(200, pf, x)
            for n in (25, 100, 200):
                exact = float(jacobi_explicit(n, pe, Fraction(x)))
                assert abs(seq.values[n] - exact) <= 1e-10 * max(1.0, abs(exact))

    def test_scalar_value_matches_sequence(self):
        p = WeightParams(1.3, -0.4)
        seq = jacobi_sequence(40, p, 0.61)
        assert jacobi_value(40, 1.3, -0.4, 0.61) == seq.values[40]


class TestConnectionIdentities:
    # adjacent-parameter relations tying the two shifted families to the base one

    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_alpha_shift(self, seed):
        rng = random.Random(seed)
        for _ in range(10):
            a = rng.uniform(-0.9, 4.0)
            b = rng.uniform(-0.9, 4.0)
            n = rng.randrange(0, 51)
            x = rng.random()
            sig = a + b + 1
            lhs = (1 - x) * jacobi_value(n, a + 1, b, x)
            rhs = (
                -(n + 1) / (2 * n + sig + 1) * jacobi_value(n + 1, a, b, x)
                + (n + a + 1) / (2 * n + sig + 1) * jacobi_value(n, a, b, x)
            )
            assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-12)

    @pytest.mark.parametrize("seed", [4, 5, 6])
    def test_beta_shift(self, seed):
        rng = random.Random(seed)
        for _ in range(10):
            a = rng.uniform(-0.9, 4.0)
            b = rng.uniform(-0.9, 4.0)
            n = rng.randrange(0, 51)
            x = rng.random()
            sig = a + b + 1
            lhs = x * jacobi_value(n, a, b + 1, x)
            rhs = (
                (n + 1) / (2 * n + sig + 1) * jacobi_value(n + 1, a, b, x)
                + (n + b + 1) / (2 * n + sig + 1) * jacobi_value(n, a, b, x)
            )
            assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-12)


class TestNorms:
    def test_legendre_h0(self):
        assert jacobi_norm(0, WeightParams(0.0, 0.0)) == pytest.approx(1.0, rel=1e-14)

    def test_legendre_h1_h2(self):
        p = WeightParams(0.0, 0.0)
        assert jacobi_norm(1, p) == pytest.approx(1 / 3, rel=1e-13)
        assert jacobi_norm(2, p) == pytest.approx(1 / 5, rel=1e-13)

    def test_chebyshev_weight_sigma_zero(self):
        # sigma = 0 exercises the regrouped denominator
        import math

        p = WeightParams(-0.5, -0.5)
        assert jacobi_norm(0, p) == pytest.approx(math.pi, rel=1e-13)
        assert jacobi_norm(1, p) == pytest.approx(math.pi / 8, rel=1e-13)

    @pytest.mark.parametrize("alpha", [0, 1, 2])
    @pytest.mark.parametrize("beta", [0, 1, 2])
    def test_exact_orthogonality(self, alpha, beta):
        # rational integration oracle: <R_k, R_l> = delta_kl * h_k exactly
        def poly_mul(p, q):
            out = [Fraction(0)] * (len(p) + len(q) - 1)
            for i, u in enumerate(p):
                for j, v in enumerate(q):
                    out[i + j] += u * v
            return out

        pe = exact_params(alpha, beta)
        coeffs = [jacobi_coeffs_exact(k, alpha, beta) for k in range(11)]
        # exact rational norm from the closed form
        sig = Fraction(alpha + beta + 1)
        K = Fraction(
            __import__("math").factorial(alpha) * __import__("math").factorial(beta),
            __import__("math").factorial(alpha + beta + 1),
        )
        for k in range(11):
            hk = K
            for l in range(k):
                hk *= Fraction(alpha + 1 + l, 1 + l)
            for l in range(k - 1):
                hk *= (Fraction(beta + 1 + l)) / (sig + 1 + l)
            if k:
                hk *= Fraction(beta + k) / (2 * k + sig)
            for l in range(11):
                integral = weighted_integral_exact(poly_mul(coeffs[k], coeffs[l]), alpha, beta)
                assert integral == (hk if k == l else 0)


def test_explicit_float_agreement_small_degree():
    # in binary64 the explicit sum holds full accuracy at low degree
    p = WeightParams(-0.33, 5.6)
    for n in range(10):
        for x in (0.2, 0.5, 0.77):
            assert agree_digits(jacobi_explicit(n, p, x), jacobi_value(n, -0.33, 5.6, x)) > 11
