"""Scikit-learn style wrappers around the evaluation and projection pipelines."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .bernstein import bernstein_all
from .dual import dual_all_multi, precompute
from .errors import DomainError
from .jacobi import WeightParams
from .projection import project

__all__ = ["DualBernsteinEvaluator", "BernsteinLeastSquares"]


def _as_points(X):
    pts = np.asarray(X, dtype=float)
    if pts.ndim == 2 and pts.shape[1] == 1:
        pts = pts.ravel()
    if pts.ndim != 1:
        raise ValueError("expected a 1-d array of points or a single column")
    if not np.all(np.isfinite(pts)):
        raise ValueError("points must be finite")
    if pts.size and (pts.min() < 0 or pts.max() > 1):
        raise DomainError("points must lie in [0, 1]")
    return pts


class DualBernsteinEvaluator(TransformerMixin, BaseEstimator):
    """Transformer mapping points of [0, 1] to rows of dual basis values.

    ``fit`` performs the x-independent preprocessing for the configured degree
    and weight; ``transform`` evaluates all degree+1 dual polynomials at each
    input point in O(degree) per point.
    """

    def __init__(self, degree=5, alpha=0.0, beta=0.0):
        self.degree = degree
        self.alpha = alpha
        self.beta = beta

    def fit(self, X=None, y=None):
        if self.degree < 0:
            raise ValueError("degree must be >= 0")
        self.params_ = WeightParams(self.alpha, self.beta)
        self.coeffs_ = precompute(self.degree, self.params_)
        self.coeffs_mirror_ = precompute(self.degree, self.params_.swapped())
        return self

    def transform(self, X):
        check_is_fitted(self, "params_")
        pts = _as_points(X)
        tables = dual_all_multi(self.degree, self.params_, list(pts))
        return np.array([t.values for t in tables])

    def get_feature_names_out(self, input_features=None):
        return np.array(["dual_%d" % i for i in range(self.degree + 1)])


class BernsteinLeastSquares(BaseEstimator):
    """Weighted least-squares fit of a callable in Bernstein form.

    ``fit(f)`` integrates f against the dual basis by Gauss-Legendre quadrature
    and stores the Bernstein coefficients; ``predict`` evaluates the fitted
    polynomial.
    """

    def __init__(self, degree=5, alpha=0.0, beta=0.0, quad_nodes=None):
        self.degree = degree
        self.alpha = alpha
        self.beta = beta
        self.quad_nodes = quad_nodes

    def fit(self, f, y=None):
        if not callable(f):
            raise TypeError("fit expects a callable defined on (0, 1)")
        params = WeightParams(self.alpha, self.beta)
        result = project(f, self.degree, params, self.quad_nodes)
        self.params_ = params
        self.result_ = result
        self.coef_ = np.array(result.coeffs)
        self.error_sq_ = result.error_sq
        return self

    def predict(self, X):
        check_is_fitted(self, "coef_")
        pts = _as_points(X)
        rows = np.array([bernstein_all(self.degree, x).values for x in pts])
        return rows @ self.coef_
