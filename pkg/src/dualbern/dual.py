"""Dual Bernstein basis evaluation under a Jacobi weight.

The production path evaluates all n+1 dual basis values at a point in O(n):
a first-order non-homogeneous recurrence is run forward from index 0 up to a
split index J, and the remaining indices are obtained by the same forward
kernel applied to the mirrored problem (swapped exponents at 1-x), exploiting
the symmetry D_i(x; a, b) = D_{n-i}(1-x; b, a).  Second- and third-order
recurrences, a closed-form expression and a short Jacobi sum are provided as
independent cross-check evaluators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import CoeffMismatch, DomainError, SingularCoefficient
from .jacobi import WeightParams, _exp, _log_gamma, jacobi_value

__all__ = [
    "DualTable",
    "PrecomputedCoeffs",
    "TPair",
    "split_cubic_coefficients",
    "split_point",
    "precompute",
    "t_pair",
    "t_poly",
    "forward_eval",
    "dual_endpoint",
    "dual_all_at_point",
    "dual_all_multi",
    "dual_via_rec2",
    "dual_via_rec3",
    "dual_explicit",
    "dual_short_sum",
    "elevation_coefficient",
]


@dataclass(frozen=True)
class DualTable:
    """All n+1 dual basis values at one point, plus the split index used."""

    n: int
    params: WeightParams
    x: float
    values: list
    split: int


@dataclass(frozen=True)
class PrecomputedCoeffs:
    """x-independent arrays q and C for one (degree, weight) pair.

    Kinv is 1/K, i.e. Gamma(sigma+1)/(Gamma(alpha+1)Gamma(beta+1)); it is the
    constant the evaluation kernel actually consumes.
    """

    n: int
    params: WeightParams
    q: list
    C: list
    Kinv: float


@dataclass(frozen=True)
class TPair:
    """The two x-dependent, index-independent Jacobi combinations of the kernel.

    R1 = (n+alpha+1) * R_n^(alpha, beta+1)(x)
    R2 = ((x-1)/x) * (n+beta+1) * R_n^(alpha+1, beta)(x)
    """

    R1: float
    R2: float


# -- split index ---------------------------------------------------------

# cubic through (0.01, 0.1), (0.3, 0.4), (0.7, 0.6), (0.99, 0.9), built
# exactly; the printed decimal coefficients are recovered to full precision
_SPLIT_NODES = (Fraction(1, 100), Fraction(3, 10), Fraction(7, 10), Fraction(99, 100))
_SPLIT_VALUES = (Fraction(1, 10), Fraction(2, 5), Fraction(3, 5), Fraction(9, 10))


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _lagrange_coeffs(nodes, values):
    deg = len(nodes) - 1
    coeffs = [Fraction(0)] * (deg + 1)
    for i, (xi, yi) in enumerate(zip(nodes, values)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(nodes):
            if j == i:
                continue
            basis = _poly_mul(basis, [-xj, Fraction(1)])
            denom *= xi - xj
        scale = yi / denom
        for k, c in enumerate(basis):
            coeffs[k] += scale * c
    return coeffs


_SPLIT_COEFFS_EXACT = tuple(_lagrange_coeffs(_SPLIT_NODES, _SPLIT_VALUES))
_SPLIT_COEFFS = tuple(float(c) for c in _SPLIT_COEFFS_EXACT)


def split_cubic_coefficients():
    """Monomial coefficients (constant first) of the split-index cubic."""
    return _SPLIT_COEFFS


def split_point(n, x):
    """Index J at which evaluation switches direction: round(n * p(x)), clamped.

    p is the split cubic; rounding ties go away from zero.  Always computed in
    binary64 so every precision context picks the same split.
    """
    xf = float(x)
    c0, c1, c2, c3 = _SPLIT_COEFFS
    p = ((c3 * xf + c2) * xf + c1) * xf + c0
    j = int(math.floor(n * p + 0.5))
    return min(max(j, 0), n)


# -- kernel ---------------------------------------------------------------


def _kinv(params):
    a, b, sig = params.alpha, params.beta, params.sigma
    return _exp(_log_gamma(sig + 1) - _log_gamma(a + 1) - _log_gamma(b + 1))


def precompute(n, params):
    """x-independent q and C tables for degree n (q empty when n = 0)."""
    if n < 0:
        raise DomainError("degree must be >= 0")
    a, b = params.alpha, params.beta
    a1, b1 = a + 1, b + 1
    kinv = _kinv(params)
    one = a * 0 + 1
    c0 = kinv * one
    for j in range(n):
        c0 = c0 * (1 + b1 / (j + a1))
    if n % 2:
        c0 = -c0
    q = []
    C = [c0]
    if n >= 1:
        q.append(-one / n)
        C.append(c0 / b1)
    for i in range(1, n):
        p = i - n
        q.append(one * (i + 1) / p)
        C.append(C[i] * (p - a1) / (i + b1))
    return PrecomputedCoeffs(n, params, q, C, kinv)


# extra decimal digits used when seeding the kernel with Jacobi values; the
# plain three-term recurrence drops 1-3 digits near the interval ends at high
# degree, which would otherwise cap whole columns of the evaluation
_GUARD_DIGITS = 10


def _jacobi_pair_guarded(n, params, x, mirror=False):
    # values of R_n^(a, b+1) and R_n^(a+1, b) at x (or at 1-x when mirror is
    # set, with the complement formed at guard precision)
    a, b = params.alpha, params.beta
    if isinstance(x, (int, float)):
        with mpmath.workdps(16 + _GUARD_DIGITS):
            am, bm = mpmath.mpf(a), mpmath.mpf(b)
            xm = 1 - mpmath.mpf(x) if mirror else mpmath.mpf(x)
            return (
                float(jacobi_value(n, am, bm + 1, xm)),
                float(jacobi_value(n, am + 1, bm, xm)),
            )
    work = mpmath.mp.dps
    with mpmath.workdps(work + _GUARD_DIGITS):
        xm = 1 - x if mirror else x
        ra = jacobi_value(n, a, b + 1, xm)
        rb = jacobi_value(n, a + 1, b, xm)
    return +ra, +rb


def t_pair(n, params, x):
    """The two Jacobi combinations shared by every index at one point.

    The underlying Jacobi values are evaluated with guard precision and
    rounded back to the working type.
    """
    a, b = params.alpha, params.beta
    ra, rb = _jacobi_pair_guarded(n, params, x)
    return TPair((n + a + 1) * ra, ((x - 1) / x) * (n + b + 1) * rb)


def _t_pair_mirror(n, params, x):
    # pair for the run at the complement point; the ratio (x'-1)/x' is formed
    # as -x/(1-x) so small-x inputs keep full relative accuracy
    a, b = params.alpha, params.beta
    ra, rb = _jacobi_pair_guarded(n, params, x, mirror=True)
    x1x = -x / (1 - x)
    return TPair((n + a + 1) * ra, x1x * (n + b + 1) * rb), x1x


def _forward_loop(n, alpha, j, coeffs, tpair, x1x):
    r1, r2 = tpair.R1, tpair.R2
    cs = coeffs.C
    qs = coeffs.q
    d = [cs[0] * r1 / (n + alpha + 1)]
    for i in range(1, j + 1):
        qi = qs[i - 1]
        d.append(qi * x1x * d[i - 1] - cs[i] * (r1 + qi * r2))
    return d


def forward_eval(n, params, x, j, coeffs, tpair):
    """Dual values for indices 0..j by the first-order forward recurrence."""
    if coeffs.n != n or coeffs.params.alpha != params.alpha or coeffs.params.beta != params.beta:
        raise CoeffMismatch(
            "coefficients built for (n=%r, alpha=%r, beta=%r)"
            % (coeffs.n, coeffs.params.alpha, coeffs.params.beta)
        )
    if not 0 < x < 1:
        raise DomainError("forward evaluation needs x in (0, 1), got %r" % (x,))
    if not 0 <= j <= n:
        raise DomainError("last index must lie in [0, n]")
    return _forward_loop(n, params.alpha, j, coeffs, tpair, (x - 1) / x)


def dual_endpoint(n, i, params, at_one):
    """Closed-form dual value at x = 1 (at_one) or x = 0."""
    if not 0 <= i <= n:
        raise DomainError("index must lie in [0, n]")
    a, b, sig = params.alpha, params.beta, params.sigma
    val = 1 / params.K
    if at_one:
        for l in range(n):
            val = val * (sig + 1 + l) / (1 + l)
        for l in range(i):
            val = val * (n - i + a + 2 + l) / (b + 1 + l)
        return -val if (n - i) % 2 else val
    for l in range(n):
        val = val * (sig + 1 + l) / (1 + l)
    for l in range(n - i):
        val = val * (i + b + 2 + l) / (a + 1 + l)
    return -val if i % 2 else val


def _table_values(n, params, swapped, x, coeffs_fwd, coeffs_bwd):
    # forward run for 0..J, mirrored forward run (at the complement) for the rest
    j = split_point(n, x)
    values = forward_eval(n, params, x, j, coeffs_fwd, t_pair(n, params, x))
    k = n - j - 1
    if k >= 0:
        tpair, x1x = _t_pair_mirror(n, swapped, x)
        tail = _forward_loop(n, swapped.alpha, k, coeffs_bwd, tpair, x1x)
        values = values + tail[::-1]
    return values, j


def dual_all_at_point(n, params, x):
    """All n+1 dual basis values at one point of [0, 1]."""
    if n < 0:
        raise DomainError("degree must be >= 0")
    if x < 0 or x > 1:
        raise DomainError("x must lie in [0, 1], got %r" % (x,))
    if x == 0 or x == 1:
        at_one = x == 1
        values = [dual_endpoint(n, i, params, at_one) for i in range(n + 1)]
        return DualTable(n, params, x, values, n if at_one else 0)
    swapped = params.swapped()
    coeffs_fwd = precompute(n, params)
    coeffs_bwd = precompute(n, swapped)
    values, j = _table_values(n, params, swapped, x, coeffs_fwd, coeffs_bwd)
    return DualTable(n, params, x, values, j)


def dual_all_multi(n, params, xs):
    """Dual tables at many points, sharing one pair of coefficient tables."""
    if n < 0:
        raise DomainError("degree must be >= 0")
    for m, x in enumerate(xs):
        if x < 0 or x > 1:
            raise DomainError("point %d out of [0, 1]: %r" % (m, x))
    swapped = params.swapped()
    coeffs_fwd = precompute(n, params)
    coeffs_bwd = precompute(n, swapped)
    tables = []
    for x in xs:
        if x == 0 or x == 1:
            at_one = x == 1
            values = [dual_endpoint(n, i, params, at_one) for i in range(n + 1)]
            tables.append(DualTable(n, params, x, values, n if at_one else 0))
        else:
            values, j = _table_values(n, params, swapped, x, coeffs_fwd, coeffs_bwd)
            tables.append(DualTable(n, params, x, values, j))
    return tables


# -- identities and cross-check evaluators --------------------------------


def elevation_coefficient(n, i, params):
    """Coefficient of the degree-n+1 Jacobi term in the degree-elevation relation.

    Defined for 0 <= i <= n+1; also yields the inhomogeneity coefficient of the
    first-order relation as elevation_coefficient(n, i+1) / (2n + sigma + 2).
    """
    if not 0 <= i <= n + 1:
        raise DomainError("index must lie in [0, n+1]")
    a, b, sig = params.alpha, params.beta, params.sigma
    val = (2 * n + sig + 2) / params.K
    den = [a + 1 + l for l in range(n - i + 1)] + [b + 1 + l for l in range(i)]
    for l in range(n):
        val = val * (sig + 1 + l) / den[l]
    val = val / den[n]
    return -val if (n - i + 1) % 2 else val


def t_poly(n, i, params, x):
    """The index-i Jacobi combination driving the first-order relation."""
    if not 0 <= i <= n:
        raise DomainError("index must lie in [0, n]")
    a, b = params.alpha, params.beta
    ra = jacobi_value(n, a, b + 1, x)
    rb = jacobi_value(n, a + 1, b, x)
    return (n - i) * (n + a + 1) * x * ra + (i + 1) * (n + b + 1) * (1 - x) * rb


def _seed_coeff(n, params):
    # (-1)^n (sigma+1)_n / (K (alpha+1)_n); multiplying by R_n^(a, b+1) gives D_0
    a, sig = params.alpha, params.sigma
    c = 1 / params.K
    for l in range(n):
        c = c * (sig + 1 + l) / (a + 1 + l)
    return -c if n % 2 else c


def _first_order_steps(n, params, x, ra, rb, seeds_needed):
    # D_0 from the closed form, then first-order steps of the non-homogeneous
    # relation; returns seeds_needed values (seeds_needed <= n+1)
    a, b = params.alpha, params.beta
    c = _seed_coeff(n, params)
    out = [c * ra]
    e = c / (b + 1)
    for i in range(seeds_needed - 1):
        tni = (n - i) * (n + a + 1) * x * ra + (i + 1) * (n + b + 1) * (1 - x) * rb
        out.append((-e * tni - (x - 1) * (i + 1) * out[i]) / (x * (n - i)))
        e = e * (-(n - i + a)) / (i + b + 2)
    return out


def _rec2_segment(n, params, x, last):
    # values for indices 0..last via the homogeneous second-order recurrence
    a, b = params.alpha, params.beta
    ra = jacobi_value(n, a, b + 1, x)
    rb = jacobi_value(n, a + 1, b, x)
    d = _first_order_steps(n, params, x, ra, rb, min(last, 1) + 1)
    ca = (n + a + 1) * x * ra
    cb = (n + b + 1) * (1 - x) * rb
    for i in range(last - 1):
        tni = (n - i) * ca + (i + 1) * cb
        tni1 = (n - i - 1) * ca + (i + 2) * cb
        u0 = (x - 1) * (i + 1) * (n - i + a) * tni1
        u1 = x * (n - i) * (n - i + a) * tni1 + (x - 1) * (i + 2) * (i + b + 2) * tni
        u2 = x * (n - i - 1) * (i + b + 2) * tni
        if u2 == 0:
            raise SingularCoefficient(i)
        d.append(-(u0 * d[i] + u1 * d[i + 1]) / u2)
    return d


def _rec3_segment(n, params, x, last):
    # values for indices 0..last via the homogeneous third-order recurrence
    a, b = params.alpha, params.beta
    ra = jacobi_value(n, a, b + 1, x)
    rb = jacobi_value(n, a + 1, b, x)
    d = _first_order_steps(n, params, x, ra, rb, min(last, 2) + 1)
    for i in range(last - 2):
        na = n - i + a
        bb = i + b + 2
        w0 = (x - 1) * (i + 1) * (na - 1) * na
        w1 = (na - 1) * (x * (n - i) * na + 2 * (x - 1) * (i + 2) * bb)
        w2 = bb * ((x - 1) * (i + 3) * (bb + 1) + 2 * x * (n - i - 1) * (na - 1))
        w3 = x * (n - i - 2) * bb * (bb + 1)
        if w3 == 0:
            raise SingularCoefficient(i)
        d.append(-(w0 * d[i] + w1 * d[i + 1] + w2 * d[i + 2]) / w3)
    return d


def _split_segments(n, params, x, segment):
    # shared forward/mirrored-forward assembly for the cross-check recurrences
    j = split_point(n, x)
    values = segment(n, params, x, j)
    k = n - j - 1
    if k >= 0:
        tail = segment(n, params.swapped(), 1 - x, k)
        values = values + tail[::-1]
    return values


def dual_via_rec2(n, params, x):
    """All dual values via the second-order recurrence (cross-check path)."""
    if n < 1:
        raise DomainError("degree must be >= 1")
    if not 0 < x < 1:
        raise DomainError("x must lie in (0, 1), got %r" % (x,))
    return _split_segments(n, params, x, _rec2_segment)


def dual_via_rec3(n, params, x):
    """All dual values via the third-order recurrence (cross-check path)."""
    if n < 2:
        raise DomainError("degree must be >= 2")
    if not 0 < x < 1:
        raise DomainError("x must lie in (0, 1), got %r" % (x,))
    return _split_segments(n, params, x, _rec3_segment)


def _explicit_direct(n, i, params, x):
    a, b = params.alpha, params.beta
    ra = jacobi_value(n, a, b + 1, x)
    rb = jacobi_value(n, a + 1, b, x)
    z = x / (x - 1)
    pref = _seed_coeff(n, params) / math.comb(n, i)
    if i % 2:
        pref = -pref
    one = 1 + x * 0
    s1 = one
    term = one
    for j in range(i):
        term = term * (j - n) * (j - n - a - 1) * z / ((j + 1) * (b + 1 + j))
        s1 = s1 + term
    s2 = 0 * one
    term = one
    for j in range(i):
        s2 = s2 + term
        term = term * (j - n) * (j - n - a) * z / ((j + 1) * (b + 2 + j))
    bracket = ra * s1 - rb * ((n + b + 1) / (b + 1)) * s2
    return pref * ((x - 1) / x) ** i * bracket


def dual_explicit(n, i, params, x):
    """One dual value from the closed form derived from the first-order relation.

    Indices past the split point are routed through the symmetry relation so
    the alternating inner sums stay short of catastrophic cancellation.
    """
    if not 0 <= i <= n:
        raise DomainError("index must lie in [0, n]")
    if not 0 < x < 1:
        raise DomainError("x must lie in (0, 1), got %r" % (x,))
    if i > split_point(n, x):
        return _explicit_direct(n, n - i, params.swapped(), 1 - x)
    return _explicit_direct(n, i, params, x)


def dual_short_sum(n, i, params, x):
    """One dual value as a short combination of parameter-shifted Jacobi values.

    Uses whichever of the two mirrored expansions has min(i, n-i)+1 terms.
    """
    if not 0 <= i <= n:
        raise DomainError("index must lie in [0, n]")
    if x < 0 or x > 1:
        raise DomainError("x must lie in [0, 1], got %r" % (x,))
    a, b, sig = params.alpha, params.beta, params.sigma
    one = 1 + x * 0
    if i <= n - i:
        pref = 1 / params.K
        den = [a + 1 + l for l in range(n - i)] + [b + 1 + l for l in range(i)]
        for l in range(n):
            pref = pref * (sig + 1 + l) / den[l]
        if (n - i) % 2:
            pref = -pref
        coef = one
        total = 0 * one
        for k in range(i + 1):
            total = total + coef * jacobi_value(n - k, a, b + k + 1, x)
            coef = coef * (k - i) / (k - n)
        return pref * total
    m = n - i
    pref = 1 / params.K
    den = [a + 1 + l for l in range(m)] + [b + 1 + l for l in range(n - m)]
    for l in range(n):
        pref = pref * (sig + 1 + l) / den[l]
    if m % 2:
        pref = -pref
    coef = one
    total = 0 * one
    for k in range(m + 1):
        total = total + coef * jacobi_value(n - k, a + k + 1, b, x)
        coef = -coef * (k - m) / (k - n)
    return pref * total
