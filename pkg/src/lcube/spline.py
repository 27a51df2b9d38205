"""Cubic regression splines in the truncated power basis.

The model for a knot sequence ``k_1 < ... < k_m`` is::

    s(x) = b0 + b1 x + b2 x^2 + b3 x^3 + sum_j beta_j (x - k_j)_+^3

Knots are placed equidistantly over ``(min(x), max(x))`` and the
coefficients are the least-squares solution ``(X^T X)^+ X^T y``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ConstantVariable, InsufficientSamples

__all__ = [
    "SplineFit",
    "normalize_minmax",
    "equidistant_knots",
    "build_design_matrix",
    "fit_least_squares",
    "evaluate_spline",
    "pinv_solve",
    "RCOND",
]

# Relative singular-value cutoff for the pseudo-inverse.
RCOND = 1e-10


@dataclass(frozen=True, eq=False)
class SplineFit:
    """A fitted cubic regression spline.

    Attributes
    ----------
    knots : ndarray, shape (m,)
        Interior knot positions.
    b : ndarray, shape (4,)
        Polynomial coefficients ``b0..b3``.
    beta : ndarray, shape (m,)
        Truncated-power coefficients.
    rss : float
        Residual sum of squares on the training data.
    """

    knots: np.ndarray
    b: np.ndarray
    beta: np.ndarray
    rss: float

    @property
    def m(self) -> int:
        return len(self.knots)

    @property
    def coef(self) -> np.ndarray:
        return np.concatenate([self.b, self.beta])

    def __call__(self, x):
        return evaluate_spline(self, x)


def normalize_minmax(v) -> np.ndarray:
    """Affinely rescale ``v`` onto [0, 1].

    Raises
    ------
    ConstantVariable
        If ``v`` takes a single value.
    """
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or v.size < 2:
        raise ValueError("need a 1-d sample with at least 2 values")
    if not np.all(np.isfinite(v)):
        raise ValueError("sample contains non-finite values")
    lo, hi = v.min(), v.max()
    if hi == lo:
        raise ConstantVariable(f"variable is constant (value {lo!r})")
    out = (v - lo) / (hi - lo)
    # guard the endpoints against rounding in the division
    out[v == lo] = 0.0
    out[v == hi] = 1.0
    return out


def equidistant_knots(m: int, x) -> np.ndarray:
    """Return ``m`` knots splitting ``[min(x), max(x)]`` into ``m + 1`` equal parts."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    x = np.asarray(x, dtype=float)
    lo, hi = x.min(), x.max()
    if not hi > lo:
        raise ConstantVariable("cannot place knots on a constant predictor")
    j = np.arange(1, m + 1)
    return lo + j * (hi - lo) / (m + 1)


def build_design_matrix(x, knots) -> np.ndarray:
    """Design matrix with columns ``1, x, x^2, x^3, (x-k_1)_+^3, ..., (x-k_m)_+^3``."""
    x = np.asarray(x, dtype=float).reshape(-1)
    knots = np.asarray(knots, dtype=float).reshape(-1)
    X = np.empty((x.size, 4 + knots.size))
    X[:, 0] = 1.0
    X[:, 1] = x
    X[:, 2] = x * x
    X[:, 3] = X[:, 2] * x
    d = np.maximum(x[:, None] - knots[None, :], 0.0)
    X[:, 4:] = d * d * d
    return X


def pinv_solve(X: np.ndarray, y: np.ndarray, rcond: float = RCOND) -> np.ndarray:
    """Minimum-norm least-squares solution ``(X^T X)^+ X^T y``.

    Evaluated through the thin SVD ``X = U S V^T``, for which
    ``(X^T X)^+ X^T = V S^+ U^T``. Working on ``X`` rather than the
    normal matrix avoids squaring the condition number. Singular values
    below ``rcond * s_max`` are treated as zero.
    """
    U, s, Vt = np.linalg.svd(X, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        return np.zeros(X.shape[1])
    keep = s > rcond * s[0]
    return Vt[keep].T @ ((U[:, keep].T @ y) / s[keep])


def fit_least_squares(x, y, knots) -> SplineFit:
    """Fit spline coefficients for fixed knots by least squares.

    Raises
    ------
    InsufficientSamples
        If there are fewer samples than coefficients.
    """
    x = np.asarray(x, dtype=float).reshape(-1)
    y = np.asarray(y, dtype=float).reshape(-1)
    knots = np.asarray(knots, dtype=float).reshape(-1)
    if x.shape != y.shape:
        raise ValueError(f"x and y lengths differ: {x.size} != {y.size}")
    p = knots.size + 4
    if x.size < p:
        raise InsufficientSamples(f"n={x.size} < m+4={p}")
    X = build_design_matrix(x, knots)
    coef = pinv_solve(X, y)
    resid = y - X @ coef
    rss = float(resid @ resid)
    return SplineFit(knots=knots.copy(), b=coef[:4].copy(), beta=coef[4:].copy(), rss=rss)


def evaluate_spline(fit: SplineFit, x0):
    """Evaluate a fitted spline at a scalar or array of points."""
    x = np.asarray(x0, dtype=float)
    val = build_design_matrix(x.reshape(-1), fit.knots) @ fit.coef
    if x.ndim == 0:
        return float(val[0])
    return val.reshape(x.shape)
