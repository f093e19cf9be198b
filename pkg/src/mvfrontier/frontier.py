r"""Closed-form Markowitz portfolios.

Every result is expressed through four scalars of the market model

.. math::

    a = \mu^T \Sigma^{-1} \mu,\quad b = \mu^T \Sigma^{-1} 1,\quad
    c = 1^T \Sigma^{-1} 1,\quad d = ac - b^2

Allocations ``theta`` are currency amounts that sum to the initial capital
``c0``; short positions (negative entries) are allowed. Because ``mu`` is in
percent per day and ``theta`` in dollars, a portfolio ``mean`` is in
dollar-percent per day (``mu @ theta``) and ``std`` shares those units. No
conversion is applied anywhere. The risk-free rate is zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadRange, DegenerateFrontier, NonpositiveB
from .linalg import cholesky, dot, solve_spd
from .returns import MarketModel

# d counts as zero below this fraction of a*c.
DEGENERACY_RTOL = 1e-12

EFFICIENT_POINT = "efficient-point"
MIN_VARIANCE = "min-variance"
TANGENCY = "tangency"
OPTIMAL = "optimal"


@dataclass(frozen=True)
class FrontierScalars:
    a: float
    b: float
    c: float
    d: float

    @property
    def degenerate(self) -> bool:
        return not self.d > DEGENERACY_RTOL * self.a * self.c


@dataclass(frozen=True, eq=False)
class Portfolio:
    theta: np.ndarray
    mean: float
    std: float
    kind: str

    @property
    def variance(self) -> float:
        return self.std * self.std


@dataclass(frozen=True)
class HyperbolaParams:
    """Frontier as ``var / variance_scale - (m - mean_center)**2 / mean_scale_sq = 1``."""

    variance_scale: float
    mean_center: float
    mean_scale_sq: float


@dataclass(frozen=True, eq=False)
class _Solved:
    scalars: FrontierScalars
    inv_mu: np.ndarray
    inv_ones: np.ndarray


def _solve(model: MarketModel) -> _Solved:
    f = cholesky(model.sigma)
    ones = np.ones(model.n)
    inv_ones = solve_spd(f, ones)
    inv_mu = solve_spd(f, model.mu)
    a = dot(model.mu, inv_mu)
    b = dot(model.mu, inv_ones)
    c = dot(ones, inv_ones)
    # Cauchy-Schwarz gives d >= 0; a negative value is rounding noise.
    d = max(a * c - b * b, 0.0)
    return _Solved(FrontierScalars(a, b, c, d), inv_mu, inv_ones)


def _capital(c0) -> float:
    c0 = float(c0)
    if not (math.isfinite(c0) and c0 > 0):
        raise ValueError(f"capital must be positive, got {c0}")
    return c0


def _require_frontier(s: FrontierScalars):
    if s.degenerate:
        raise DegenerateFrontier(
            f"d = {s.d:.3e} is numerically zero (mu proportional to the ones vector); "
            "every frontier portfolio has the same mean"
        )


def _frozen(x):
    x = np.array(x, dtype=np.float64)
    x.setflags(write=False)
    return x


def frontier_scalars(model: MarketModel) -> FrontierScalars:
    return _solve(model).scalars


def min_variance_portfolio(model: MarketModel, c0: float) -> Portfolio:
    """Global minimum-variance allocation. Depends on sigma only; ``mu`` just sets the mean."""
    c0 = _capital(c0)
    sv = _solve(model)
    s = sv.scalars
    return Portfolio(_frozen(sv.inv_ones * (c0 / s.c)), s.b * c0 / s.c, c0 / math.sqrt(s.c), MIN_VARIANCE)


def _tangency(sv: _Solved, c0: float) -> Portfolio:
    s = sv.scalars
    if not s.b > 0:
        raise NonpositiveB(
            f"b = {s.b:.3e} <= 0: the maximum-Sharpe point lies on the inefficient branch"
        )
    return Portfolio(
        _frozen(sv.inv_mu * (c0 / s.b)), s.a * c0 / s.b, math.sqrt(s.a) * c0 / s.b, TANGENCY
    )


def tangency_portfolio(model: MarketModel, c0: float) -> Portfolio:
    """Maximum mean/std portfolio (zero risk-free rate). Requires ``b > 0``."""
    return _tangency(_solve(model), _capital(c0))


def frontier_variance(s: FrontierScalars, c0: float, target_mean: float) -> float:
    """Variance of the frontier portfolio with the given mean.

    Evaluated in vertex form ``c0**2/c + c*(m - b*c0/c)**2/d``, which equals
    ``(c*m**2 - 2*b*c0*m + a*c0**2)/d`` without the cancellation near the vertex.
    """
    c0 = _capital(c0)
    _require_frontier(s)
    dm = target_mean - s.b * c0 / s.c
    return c0 * c0 / s.c + s.c * dm * dm / s.d


def frontier_coefficients(s: FrontierScalars, c0: float) -> tuple:
    """Coefficients ``(k2, k1, k0)`` of ``variance = k2*m**2 + k1*m + k0``."""
    c0 = _capital(c0)
    _require_frontier(s)
    return s.c / s.d, -2.0 * s.b * c0 / s.d, s.a * c0 * c0 / s.d


def hyperbola_params(s: FrontierScalars, c0: float) -> HyperbolaParams:
    c0 = _capital(c0)
    _require_frontier(s)
    return HyperbolaParams(c0 * c0 / s.c, s.b * c0 / s.c, s.d * c0 * c0 / (s.c * s.c))


def _efficient(sv: _Solved, c0: float, target_mean: float) -> Portfolio:
    s = sv.scalars
    _require_frontier(s)
    intercept = (s.a * sv.inv_ones - s.b * sv.inv_mu) * (c0 / s.d)
    slope = (s.c * sv.inv_mu - s.b * sv.inv_ones) / s.d
    theta = intercept + target_mean * slope
    var = frontier_variance(s, c0, target_mean)
    return Portfolio(_frozen(theta), float(target_mean), math.sqrt(var), EFFICIENT_POINT)


def efficient_frontier_allocation(model: MarketModel, c0: float, target_mean: float) -> Portfolio:
    """Minimum-variance allocation with mean ``target_mean`` and budget ``c0``.

    Targets below the minimum-variance mean are accepted and land on the lower,
    inefficient half of the hyperbola; the result is still variance-minimal
    for that mean.
    """
    return _efficient(_solve(model), _capital(c0), float(target_mean))


def optimal_portfolio(model: MarketModel, c0: float, gamma: float) -> Portfolio:
    """Mean-variance optimum for risk aversion ``gamma``.

    The allocation blends tangency and minimum variance with tangency weight
    ``b / (gamma * c0)``; mean is ``d/(c*gamma) + mu_mv`` and variance
    ``d/(c*gamma**2) + sigma_mv**2``.
    """
    c0 = _capital(c0)
    gamma = float(gamma)
    if not (math.isfinite(gamma) and gamma > 0):
        raise ValueError(f"risk aversion must be positive, got {gamma}")
    sv = _solve(model)
    s = sv.scalars
    tg = _tangency(sv, c0)
    mv_theta = sv.inv_ones * (c0 / s.c)
    w = s.b / (c0 * gamma)
    theta = w * tg.theta + (1.0 - w) * mv_theta
    mean = s.d / (s.c * gamma) + s.b * c0 / s.c
    var = s.d / (s.c * gamma * gamma) + c0 * c0 / s.c
    return Portfolio(_frozen(theta), mean, math.sqrt(var), OPTIMAL)


def frontier_sample(model: MarketModel, c0: float, mean_lo: float, mean_hi: float, points: int) -> list:
    """``points`` equally spaced frontier portfolios from ``mean_lo`` to ``mean_hi``."""
    if int(points) != points or points < 2:
        raise BadRange(f"points must be an integer >= 2, got {points}")
    if not (math.isfinite(mean_lo) and math.isfinite(mean_hi) and mean_lo < mean_hi):
        raise BadRange(f"need mean_lo < mean_hi, got [{mean_lo}, {mean_hi}]")
    c0 = _capital(c0)
    sv = _solve(model)
    return [_efficient(sv, c0, float(m)) for m in np.linspace(mean_lo, mean_hi, int(points))]
