"""Bernstein basis rows and the Jacobi weight function."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

__all__ = ["BernsteinRow", "bernstein_all", "weight"]


@dataclass(frozen=True)
class BernsteinRow:
    """All n+1 Bernstein basis values at one point."""

    n: int
    x: float
    values: list


def _row_values(n, x):
    # x in [0, 0.5]; ratios run outward from the modal index so no partial
    # product ever exceeds the row maximum (safe for n up to 1e4 and beyond),
    # then the row is normalised by its sum (the basis sums to one).
    one = 1 + x * 0
    zero = 0 * one
    if x == 0:
        return [one] + [zero] * n
    y = 1 - x
    m = min(n, int((n + 1) * float(x)))
    u = [zero] * (n + 1)
    u[m] = one
    for i in range(m, n):
        u[i + 1] = u[i] * ((n - i) * x) / ((i + 1) * y)
    for i in range(m, 0, -1):
        u[i - 1] = u[i] * (i * y) / ((n - i + 1) * x)
    s = sum(u)
    return [v / s for v in u]


def bernstein_all(n, x):
    """All Bernstein basis values of degree n at x, in O(n) without overflow."""
    if n < 0:
        raise DomainError("degree must be >= 0")
    if x < 0 or x > 1:
        raise DomainError("x must lie in [0, 1], got %r" % (x,))
    if x > 0.5:
        inner = _row_values(n, 1 - x)
        return BernsteinRow(n, x, inner[::-1])
    return BernsteinRow(n, x, _row_values(n, x))


def weight(params, x):
    """The weight (1-x)^alpha * x^beta; singular endpoints are rejected."""
    if x < 0 or x > 1:
        raise DomainError("x must lie in [0, 1], got %r" % (x,))
    if x == 0 and params.beta < 0:
        raise DomainError("weight is singular at x=0 for beta < 0")
    if x == 1 and params.alpha < 0:
        raise DomainError("weight is singular at x=1 for alpha < 0")
    return (1 - x) ** params.alpha * x ** params.beta
