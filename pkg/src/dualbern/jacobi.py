"""Shifted Jacobi polynomials on [0, 1]: explicit sum, three-term recurrence, norms.

All evaluation routines are plain scalar arithmetic, so they accept float,
``mpmath.mpf`` or ``fractions.Fraction`` inputs alike.  The recurrence is the
fast path; the explicit sum is the reference formula (exact when driven with
rational inputs, cancellation-prone in fixed precision at large degree).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .errors import DegenerateRecurrence, DomainError

__all__ = [
    "WeightParams",
    "JacobiSequence",
    "jacobi_explicit",
    "jacobi_sequence",
    "jacobi_norm",
    "jacobi_value",
]


def _log_gamma(v):
    if isinstance(v, (int, float)):
        return math.lgamma(v)
    return mpmath.loggamma(mpmath.mpmathify(v))


def _exp(v):
    if isinstance(v, (int, float)):
        return math.exp(v)
    return mpmath.exp(v)


@dataclass(frozen=True)
class WeightParams:
    """Exponent pair (alpha, beta) of the weight (1-x)^alpha * x^beta on [0, 1].

    ``sigma = alpha + beta + 1`` and ``K = Gamma(alpha+1)Gamma(beta+1)/Gamma(sigma+1)``
    are derived at construction.  Both exponents must exceed -1.
    """

    alpha: float
    beta: float
    sigma: float
    K: float

    def __init__(self, alpha, beta):
        if not alpha > -1:
            raise DomainError("alpha must be > -1, got %r" % (alpha,))
        if not beta > -1:
            raise DomainError("beta must be > -1, got %r" % (beta,))
        sigma = alpha + beta + 1
        k = _exp(_log_gamma(alpha + 1) + _log_gamma(beta + 1) - _log_gamma(sigma + 1))
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "K", k)

    def swapped(self):
        """Weight with the two exponents exchanged."""
        return WeightParams(self.beta, self.alpha)


@dataclass(frozen=True)
class JacobiSequence:
    """Values of one Jacobi family at one point, degrees 0..N."""

    params: WeightParams
    x: float
    values: list


def jacobi_explicit(n, params, x):
    """Degree-n shifted Jacobi value from the terminating hypergeometric sum.

    Pochhammer factors are accumulated multiplicatively term by term; no gamma
    calls are made, so the result is exact for rational inputs.
    """
    if n < 0:
        raise DomainError("degree must be >= 0")
    return _explicit(n, params.alpha, params.beta, params.sigma, x)


def _explicit(n, a, b, sig, x):
    pref = 1
    for l in range(n):
        pref = pref * (a + 1 + l) / (1 + l)
    omx = 1 - x
    term = 1 + x * 0
    total = term
    for k in range(n):
        term = term * (k - n) * (n + sig + k) * omx / ((k + 1) * (a + 1 + k))
        total = total + term
    return pref * total


def _xi_coeffs(m, sig, a, b, x):
    # three-term coefficients at step m, in the (2x-1) form
    two_sig = 2 * m + sig
    xi0 = -2 * (m + a + 1) * (m + b + 1) * (two_sig + 3)
    xi1 = (two_sig + 2) * ((two_sig + 1) * (two_sig + 3) * (2 * x - 1) + a * a - b * b)
    xi2 = -2 * (m + 2) * (m + sig + 1) * (two_sig + 1)
    return xi0, xi1, xi2


def jacobi_value(n, alpha, beta, x):
    """Single shifted Jacobi value by the three-term recurrence (O(n), O(1) memory)."""
    sig = alpha + beta + 1
    one = 1 + x * 0
    if n == 0:
        return one
    prev = one
    cur = _explicit(1, alpha, beta, sig, x)
    for m in range(n - 1):
        xi0, xi1, xi2 = _xi_coeffs(m, sig, alpha, beta, x)
        if xi2 == 0:
            raise DegenerateRecurrence("xi2 vanished at step %d" % m)
        prev, cur = cur, -(xi0 * prev + xi1 * cur) / xi2
    return cur


def jacobi_sequence(N, params, x):
    """All shifted Jacobi values of degree 0..N at x, by the recurrence."""
    if N < 0:
        raise DomainError("max degree must be >= 0")
    a, b, sig = params.alpha, params.beta, params.sigma
    one = 1 + x * 0
    values = [one]
    if N >= 1:
        values.append(_explicit(1, a, b, sig, x))
    for m in range(N - 1):
        xi0, xi1, xi2 = _xi_coeffs(m, sig, a, b, x)
        if xi2 == 0:
            raise DegenerateRecurrence("xi2 vanished at step %d" % m)
        values.append(-(xi0 * values[m] + xi1 * values[m + 1]) / xi2)
    return JacobiSequence(params, x, values)


def jacobi_norm(k, params):
    """Squared weighted L2 norm h_k of the degree-k shifted Jacobi polynomial.

    Uses the sigma-safe regrouping of the denominator, valid down to sigma = 0
    (the Chebyshev weight); h_0 = K.
    """
    if k < 0:
        raise DomainError("degree must be >= 0")
    if k == 0:
        return params.K
    a, b, sig = params.alpha, params.beta, params.sigma
    h = params.K
    for l in range(k):
        h = h * (a + 1 + l) / (1 + l)
    for l in range(k - 1):
        h = h * (b + 1 + l) / (sig + 1 + l)
    return h * (b + k) / (2 * k + sig)
