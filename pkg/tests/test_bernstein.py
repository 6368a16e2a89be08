"""Tests for the Bernstein basis row and the weight function."""

import math
import random

import pytest
from numpy.testing import assert_allclose

from dualbern import DomainError, WeightParams, bernstein_all, weight

EPS = 2.0**-52


class TestBernsteinRow:
    def test_left_endpoint(self):
        assert bernstein_all(3, 0.0).values == [1.0, 0.0, 0.0, 0.0]

    def test_right_endpoint(self):
        assert bernstein_all(3, 1.0).values == [0.0, 0.0, 0.0, 1.0]

    def test_degree_two_midpoint(self):
        assert bernstein_all(2, 0.5).values == [0.25, 0.5, 0.25]

    def test_matches_direct_formula_small_degree(self):
        for n in (1, 2, 5, 9):
            for x in (0.1, 0.3, 0.62, 0.95):
                direct = [math.comb(n, i) * x**i * (1 - x) ** (n - i) for i in range(n + 1)]
                assert_allclose(bernstein_all(n, x).values, direct, rtol=5e-14)

    def test_partition_of_unity(self):
        rng = random.Random(11)
        for _ in range(25):
            n = rng.randrange(0, 2001)
            x = rng.random()
            row = bernstein_all(n, x)
            assert abs(sum(row.values) - 1.0) <= max(1, n) * EPS
            assert all(v >= 0 for v in row.values)

    def test_no_overflow_high_degree(self):
        for x in (0.004, 0.3, 0.5):
            row = bernstein_all(10**4, x)
            assert all(math.isfinite(v) for v in row.values)
            assert abs(sum(row.values) - 1.0) <= 10**4 * EPS

    def test_symmetry_mirror(self):
        # dyadic probes make the mirrored call bitwise identical
        rng = random.Random(5)
        for _ in range(20):
            n = rng.randrange(0, 500)
            x = rng.randrange(1, 64) / 64
            left = bernstein_all(n, x).values
            right = bernstein_all(n, 1 - x).values
            for i in range(n + 1):
                a, b = left[i], right[n - i]
                assert abs(a - b) <= 2 * EPS * max(abs(a), abs(b))

    def test_rejects_outside_unit_interval(self):
        with pytest.raises(DomainError):
            bernstein_all(4, -0.1)
        with pytest.raises(DomainError):
            bernstein_all(4, 1.1)


class TestWeight:
    def test_flat_weight(self):
        assert weight(WeightParams(0.0, 0.0), 0.42) == 1.0

    def test_integer_exponents(self):
        assert weight(WeightParams(1.0, 2.0), 0.5) == pytest.approx(0.125, rel=1e-15)

    def test_chebyshev_midpoint(self):
        assert weight(WeightParams(-0.5, -0.5), 0.5) == pytest.approx(2.0, rel=1e-15)

    def test_singular_endpoints_rejected(self):
        with pytest.raises(DomainError):
            weight(WeightParams(-0.5, 0.0), 1.0)
        with pytest.raises(DomainError):
            weight(WeightParams(0.0, -0.5), 0.0)

    def test_benign_endpoints(self):
        assert weight(WeightParams(1.0, 0.0), 1.0) == 0.0
        assert weight(WeightParams(0.0, 2.0), 0.0) == 0.0
