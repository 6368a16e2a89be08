"""Ground-truth machinery: exact rational Gram duals, arbitrary-precision
re-execution of the production evaluator, and digit-accuracy statistics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .dual import DualTable, _table_values, dual_endpoint, precompute
from .errors import DomainError, UndefinedAcc, UnsupportedParams
from .jacobi import WeightParams

__all__ = [
    "RationalMatrix",
    "AccuracyReport",
    "BINARY64_DIGITS",
    "gram_matrix",
    "dual_coeffs_exact",
    "dual_values_exact",
    "bernstein_coeffs_exact",
    "jacobi_coeffs_exact",
    "weighted_integral_exact",
    "highprec_dual_all",
    "acc",
    "run_experiment",
]

# decimal digits carried by an IEEE double significand
BINARY64_DIGITS = 53 * math.log10(2)

_MAX_EXACT_DEGREE = 12


@dataclass(frozen=True)
class RationalMatrix:
    """Square matrix of exact rationals."""

    n: int
    entries: list


@dataclass(frozen=True)
class AccuracyReport:
    """Digit-accuracy statistics of one (degree, weight, precision) sweep."""

    n: int
    params: WeightParams
    precision: object
    mean_acc: float
    p1_acc: float
    min_acc: float
    grid: str
    skipped: int = 0


def _int_params(params):
    a, b = params.alpha, params.beta
    ia, ib = int(a), int(b)
    if ia != a or ib != b or ia < 0 or ib < 0:
        raise UnsupportedParams(
            "exact Gram path needs non-negative integer exponents, got (%r, %r)" % (a, b)
        )
    return ia, ib


def _beta_int(p, q):
    # Beta(p, q) for positive integers, as an exact rational
    return Fraction(math.factorial(p - 1) * math.factorial(q - 1), math.factorial(p + q - 1))


def gram_matrix(n, params):
    """Exact Gram matrix of the Bernstein basis under the weight (integer exponents)."""
    ia, ib = _int_params(params)
    if n > _MAX_EXACT_DEGREE:
        raise UnsupportedParams("exact arithmetic path is budgeted for n <= %d" % _MAX_EXACT_DEGREE)
    entries = []
    for i in range(n + 1):
        row = []
        for j in range(n + 1):
            row.append(
                math.comb(n, i)
                * math.comb(n, j)
                * _beta_int(i + j + ib + 1, 2 * n - i - j + ia + 1)
            )
        entries.append(row)
    return RationalMatrix(n, entries)


def dual_coeffs_exact(n, params):
    """Exact dual-basis coefficients: row j expands the j-th dual over the basis.

    Computed as the exact inverse of the Gram matrix by rational Gauss-Jordan
    elimination; M * Gram is the identity with zero tolerance.
    """
    gram = gram_matrix(n, params)
    size = n + 1
    a = [row[:] for row in gram.entries]
    m = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("Gram matrix is singular")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        m[col] = [v * inv for v in m[col]]
        for r in range(size):
            if r == col or a[r][col] == 0:
                continue
            f = a[r][col]
            a[r] = [v - f * w for v, w in zip(a[r], a[col])]
            m[r] = [v - f * w for v, w in zip(m[r], m[col])]
    return RationalMatrix(n, m)


def bernstein_coeffs_exact(n, i):
    """Monomial coefficients (exact) of the i-th Bernstein basis polynomial."""
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(n - i + 1):
        coeffs[i + j] = Fraction(math.comb(n, i) * math.comb(n - i, j) * (-1) ** j)
    return coeffs


def jacobi_coeffs_exact(k, alpha, beta):
    """Monomial coefficients (exact) of the degree-k shifted Jacobi polynomial."""
    a = Fraction(alpha)
    b = Fraction(beta)
    sig = a + b + 1
    pref = Fraction(1)
    for l in range(k):
        pref *= (a + 1 + l) / (1 + l)
    coeffs = [Fraction(0)] * (k + 1)
    ratio = Fraction(1)  # running term of the hypergeometric sum
    poly_1mx = [Fraction(1)]  # running power (1-x)^j in monomial form
    for j in range(k + 1):
        for m, c in enumerate(poly_1mx):
            coeffs[m] += ratio * c
        ratio = ratio * (j - k) * (k + sig + j) / ((j + 1) * (a + 1 + j))
        # multiply running (1-x)^j by (1-x)
        nxt = [Fraction(0)] * (len(poly_1mx) + 1)
        for m, c in enumerate(poly_1mx):
            nxt[m] += c
            nxt[m + 1] -= c
        poly_1mx = nxt
    return [pref * c for c in coeffs]


def weighted_integral_exact(coeffs, alpha, beta):
    """Exact integral over [0, 1] of (1-x)^alpha x^beta p(x) for integer exponents."""
    if alpha < 0 or beta < 0:
        raise UnsupportedParams("exact integration needs non-negative integer exponents")
    total = Fraction(0)
    for m, c in enumerate(coeffs):
        if c:
            total += c * _beta_int(m + beta + 1, alpha + 1)
    return total


def dual_values_exact(n, params, x):
    """Exact rational dual values at rational x, from the inverted Gram matrix."""
    m = dual_coeffs_exact(n, params)
    xq = Fraction(x)
    bern = [
        math.comb(n, i) * xq**i * (1 - xq) ** (n - i) for i in range(n + 1)
    ]
    return [sum(m.entries[j][i] * bern[i] for i in range(n + 1)) for j in range(n + 1)]


def _tables_mp(n, params, xs, digits):
    # re-runs the production kernel inside an mpf context of the given precision
    with mpmath.workdps(digits):
        a = mpmath.mpf(params.alpha)
        b = mpmath.mpf(params.beta)
        p = WeightParams(a, b)
        swapped = p.swapped()
        coeffs_fwd = precompute(n, p)
        coeffs_bwd = precompute(n, swapped)
        tables = []
        for x in xs:
            xx = mpmath.mpf(x)
            if xx == 0 or xx == 1:
                at_one = xx == 1
                values = [dual_endpoint(n, i, p, at_one) for i in range(n + 1)]
                tables.append(DualTable(n, p, xx, values, n if at_one else 0))
            else:
                values, j = _table_values(n, p, swapped, xx, coeffs_fwd, coeffs_bwd)
                tables.append(DualTable(n, p, xx, values, j))
    return tables


def highprec_dual_all(n, params, x, digits):
    """The production evaluation re-executed in `digits`-decimal arithmetic."""
    if digits < 16:
        raise DomainError("need at least 16 decimal digits")
    if x < 0 or x > 1:
        raise DomainError("x must lie in [0, 1], got %r" % (x,))
    return _tables_mp(n, params, [x], digits)[0]


def acc(approx, exact, cap=BINARY64_DIGITS):
    """Count of exact significant decimal digits of `approx` against `exact`.

    Clamped to [0, cap]; exact agreement reports the cap.  `cap` should be the
    digit count of the working precision that produced `approx`.
    """
    if exact == 0:
        raise UndefinedAcc("reference value is zero")
    rel = abs(1 - approx / exact)
    if rel == 0:
        return float(cap)
    if isinstance(rel, float):
        val = -math.log10(rel)
    else:
        val = float(-mpmath.log10(rel))
    return min(float(cap), max(0.0, val))


def _digits_of(precision):
    return BINARY64_DIGITS if precision == "binary64" else float(precision)


def run_experiment(n_list, params_list, precisions, grid, ref_digits=512):
    """Accuracy sweep: working-precision tables against a high-precision reference.

    Emits one report per (n, params, precision).  Componentwise comparisons
    where the reference is smaller than 10^(-ref_digits/2) are skipped and
    counted in the report.
    """
    from .dual import dual_all_multi

    grid = list(grid)
    grid_desc = "%d points in [%g, %g]" % (len(grid), min(grid), max(grid))
    reports = []
    for n in n_list:
        for params in params_list:
            ref = _tables_mp(n, params, grid, ref_digits)
            for precision in precisions:
                if precision == "binary64":
                    work = dual_all_multi(n, params, grid)
                else:
                    work = _tables_mp(n, params, grid, int(precision))
                cap = _digits_of(precision)
                accs = []
                skipped = 0
                with mpmath.workdps(ref_digits):
                    tiny = mpmath.mpf(10) ** (-(ref_digits // 2))
                    for wt, rt in zip(work, ref):
                        for w, r in zip(wt.values, rt.values):
                            if abs(r) < tiny:
                                skipped += 1
                                continue
                            accs.append(acc(mpmath.mpf(w), r, cap))
                reports.append(
                    AccuracyReport(
                        n,
                        params,
                        precision,
                        float(np.mean(accs)),
                        float(np.percentile(accs, 1.0)),
                        float(min(accs)),
                        grid_desc,
                        skipped,
                    )
                )
    return reports
