"""Clamped B-spline bases and least-squares curve fitting.

A basis is parameterized by its degrees of freedom ``df`` (the number of
basis functions) on the closed interval spanned by an observation grid.
Internal knots are placed uniformly, boundary knots are repeated
``degree + 1`` times, and the basis carries no extra constant column, so a
cubic basis with ``df = n`` has ``n - 4`` internal knots and the rows of
every collocation matrix sum to one.

Fitting is plain linear least squares via an orthogonal decomposition
(never the normal equations); sparse rows with missing time points are fit
on their observed samples only and can then be evaluated anywhere in the
domain.
"""

from dataclasses import dataclass

import numpy as np
from scipy.interpolate import BSpline

from .errors import (
    InsufficientDataError,
    InvalidParameterError,
    OutOfDomainError,
    SingularFitError,
)


def _check_grid(grid):
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 2:
        raise InvalidParameterError("grid must be a 1-D array with at least 2 points")
    if not np.all(np.diff(grid) > 0):
        raise InvalidParameterError("grid must be strictly increasing")
    return grid


@dataclass(frozen=True)
class SplineBasis:
    """A clamped B-spline basis of dimension ``df`` on ``domain``."""

    degree: int
    knots: np.ndarray  # full clamped knot vector, length df + degree + 1
    domain: tuple
    df: int

    @property
    def internal_knots(self):
        p = self.degree
        return self.knots[p + 1 : -(p + 1)]


@dataclass(frozen=True)
class SplineFit:
    """Least-squares coefficients for one curve over a shared basis."""

    basis: SplineBasis
    coefficients: np.ndarray


def build_basis(grid, df, degree=3):
    """Build a clamped B-spline basis with ``df`` functions over ``grid``'s span.

    The ``df - degree - 1`` internal knots are uniformly spaced strictly
    inside the domain; boundary knots are repeated ``degree + 1`` times.
    ``df = degree + 1`` gives a single polynomial segment.
    """
    grid = _check_grid(grid)
    df = int(df)
    degree = int(degree)
    if degree < 0:
        raise InvalidParameterError("degree must be non-negative")
    if df < degree + 1:
        raise InvalidParameterError(
            f"df={df} is below the minimum {degree + 1} for degree {degree}"
        )
    lo, hi = float(grid[0]), float(grid[-1])
    internal = np.linspace(lo, hi, df - degree + 1)[1:-1]
    knots = np.concatenate([np.full(degree + 1, lo), internal, np.full(degree + 1, hi)])
    return SplineBasis(degree=degree, knots=knots, domain=(lo, hi), df=df)


def basis_matrix(basis, eval_grid):
    """Evaluate all basis functions on ``eval_grid``.

    Returns a dense ``len(eval_grid) x df`` matrix whose rows sum to one.
    Points outside the (closed) domain raise :class:`OutOfDomainError`.
    """
    x = np.atleast_1d(np.asarray(eval_grid, dtype=float))
    lo, hi = basis.domain
    if np.any(x < lo) or np.any(x > hi):
        raise OutOfDomainError(
            f"evaluation points outside basis domain [{lo}, {hi}]"
        )
    return BSpline.design_matrix(x, basis.knots, basis.degree).toarray()


def _solve_lstsq(bmat, y, df):
    # np.linalg.lstsq factorizes orthogonally and reports the numerical rank
    coef, _, rank, _ = np.linalg.lstsq(bmat, y, rcond=None)
    if rank < df:
        raise SingularFitError(f"design matrix rank {rank} < df={df}")
    return coef


def fit_curve(y, basis_mat, basis=None):
    """Least-squares fit of one curve (or a stack of curves) on a basis matrix.

    ``y`` may be a length-d vector or an N x d matrix sampled on the rows of
    ``basis_mat`` (d x df).  Returns a :class:`SplineFit` when ``basis`` is
    given and ``y`` is one curve, otherwise the raw coefficient array.
    """
    y = np.asarray(y, dtype=float)
    d, df = basis_mat.shape
    if y.shape[-1] != d:
        raise InvalidParameterError("y length does not match basis matrix rows")
    if d < df:
        raise InsufficientDataError(f"{d} samples cannot identify df={df} coefficients")
    coef = _solve_lstsq(basis_mat, y.T if y.ndim == 2 else y, df)
    if y.ndim == 2:
        return coef.T
    if basis is not None:
        return SplineFit(basis=basis, coefficients=coef)
    return coef


def fit_sparse(t_obs, y_obs, basis):
    """Fit a curve from irregular observed samples only.

    Used for rows with missing time points: the fit minimizes the residual
    over the observed pairs, then :func:`evaluate` reconstructs the curve on
    any grid inside the domain.
    """
    t_obs = np.asarray(t_obs, dtype=float)
    y_obs = np.asarray(y_obs, dtype=float)
    if t_obs.shape != y_obs.shape or t_obs.ndim != 1:
        raise InvalidParameterError("t_obs and y_obs must be 1-D and equally long")
    if t_obs.size < basis.df:
        raise InsufficientDataError(
            f"{t_obs.size} observed samples < df={basis.df}"
        )
    bmat = basis_matrix(basis, t_obs)
    coef = _solve_lstsq(bmat, y_obs, basis.df)
    return SplineFit(basis=basis, coefficients=coef)


def evaluate(fit, eval_grid):
    """Evaluate a fitted curve: ``B(eval_grid) @ coefficients``."""
    return basis_matrix(fit.basis, eval_grid) @ fit.coefficients


def resample_grid(grid, m):
    """Evenly spaced grid over the span of ``grid`` with ``m`` times as many points."""
    grid = _check_grid(grid)
    if int(m) < 1:
        raise InvalidParameterError("oversampling factor m must be >= 1")
    return np.linspace(grid[0], grid[-1], int(m) * grid.size)
