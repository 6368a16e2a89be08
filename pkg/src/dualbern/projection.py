"""Weighted least-squares approximation in Bernstein form via the dual basis."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bernstein import bernstein_all
from .dual import dual_all_multi
from .errors import DomainError, UnsupportedParams
from .jacobi import WeightParams

__all__ = ["ProjectionResult", "gauss_legendre", "project", "INTEGRANDS"]


@dataclass(frozen=True)
class ProjectionResult:
    """Bernstein coefficients of the weighted least-squares approximant."""

    n: int
    params: WeightParams
    coeffs: list
    error_sq: float
    quad_nodes: int


# named test integrands for the command-line surface
INTEGRANDS = {
    "one": lambda x: 1.0,
    "x": lambda x: x,
    "exp": math.exp,
    "sin2pi": lambda x: math.sin(2 * math.pi * x),
    "runge": lambda x: 1.0 / (1.0 + 25.0 * (2.0 * x - 1.0) ** 2),
}


def gauss_legendre(m):
    """m-point Gauss-Legendre rule mapped to [0, 1]; weights sum to one."""
    if not 1 <= m <= 256:
        raise DomainError("node count must lie in [1, 256]")
    t, w = np.polynomial.legendre.leggauss(m)
    return (t + 1.0) / 2.0, w / 2.0


def project(f, n, params, m=None):
    """Coefficients of the degree-n weighted least-squares approximant of f.

    The weight is folded into the quadrature integrand, so both exponents must
    be non-negative.  All dual values come from one multi-point evaluation.
    """
    if params.alpha < 0 or params.beta < 0:
        raise UnsupportedParams(
            "projection quadrature needs alpha >= 0 and beta >= 0"
        )
    if m is None:
        m = max(64, 2 * n + 16)
    nodes, wts = gauss_legendre(m)
    fvals = np.array([f(x) for x in nodes])
    wfactor = wts * (1.0 - nodes) ** params.alpha * nodes**params.beta
    duals = np.array([t.values for t in dual_all_multi(n, params, list(nodes))])
    coeffs = duals.T @ (wfactor * fvals)
    bern = np.array([bernstein_all(n, x).values for x in nodes])
    resid = fvals - bern @ coeffs
    error_sq = float(wfactor @ resid**2)
    return ProjectionResult(n, params, [float(c) for c in coeffs], error_sq, m)
