"""Percent daily returns and their sample moments."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import AdjustedUnavailable, DimensionMismatch, InsufficientData
from .linalg import SymMatrix, as_vector
from .market_data import AlignedPrices

SOURCES = ("close", "adjusted")
DIVISORS = ("sample", "population")


@dataclass(frozen=True, eq=False)
class ReturnsPanel:
    """T x N matrix of daily returns in percent."""

    asset_ids: tuple
    returns: np.ndarray

    @property
    def observations(self) -> int:
        return self.returns.shape[0]


@dataclass(frozen=True, eq=False)
class MarketModel:
    """Mean vector (percent/day) and covariance (percent^2/day) of N assets.

    ``observations`` is the number of returns the estimates came from, or
    None when the model was entered by hand.
    """

    asset_ids: tuple
    mu: np.ndarray
    sigma: SymMatrix
    observations: Optional[int] = None

    def __post_init__(self):
        ids = tuple(self.asset_ids)
        object.__setattr__(self, "asset_ids", ids)
        mu = as_vector(self.mu)
        object.__setattr__(self, "mu", mu)
        sigma = self.sigma if isinstance(self.sigma, SymMatrix) else SymMatrix(self.sigma)
        object.__setattr__(self, "sigma", sigma)
        if not (len(ids) == mu.shape[0] == sigma.n):
            raise DimensionMismatch(
                f"{len(ids)} asset ids, mu of length {mu.shape[0]}, sigma of size {sigma.n}"
            )
        if np.any(sigma.diagonal() < 0):
            raise ValueError("covariance diagonal must be non-negative")

    @property
    def n(self) -> int:
        return len(self.asset_ids)


def daily_returns(p: AlignedPrices, source: str = "close") -> ReturnsPanel:
    """``(price[t+1] - price[t]) / price[t] * 100`` for each asset."""
    if source == "close":
        prices = p.close
    elif source == "adjusted":
        prices = p.adjusted
        missing = np.isnan(prices)
        if missing.any():
            t, j = np.argwhere(missing)[0]
            raise AdjustedUnavailable(
                f"{p.asset_ids[j]} has no adjusted close on {p.dates[t].isoformat()}"
            )
    else:
        raise ValueError(f"source must be one of {SOURCES}, got {source!r}")
    if prices.shape[0] < 2:
        raise InsufficientData("need at least 2 price rows to form a return")
    r = (prices[1:] - prices[:-1]) / prices[:-1] * 100.0
    r.setflags(write=False)
    return ReturnsPanel(tuple(p.asset_ids), r)


def _column_means(x: np.ndarray) -> np.ndarray:
    means = x.mean(axis=0)
    # Summation rounding would otherwise leave a constant column with ~1e-17 deviations.
    const = np.all(x == x[0], axis=0)
    means[const] = x[0, const]
    return means


def mean_vector(r: ReturnsPanel) -> np.ndarray:
    if r.observations < 1:
        raise InsufficientData("mean of an empty returns panel")
    return as_vector(_column_means(r.returns))


def covariance_matrix(r: ReturnsPanel, divisor: str = "sample") -> SymMatrix:
    """Two-pass covariance; each (i, j) pair is computed once and mirrored."""
    T, N = r.returns.shape
    if T < 2:
        raise InsufficientData(f"covariance needs at least 2 returns, got {T}")
    if divisor == "sample":
        denom = T - 1
    elif divisor == "population":
        denom = T
    else:
        raise ValueError(f"divisor must be one of {DIVISORS}, got {divisor!r}")

    dev = r.returns - _column_means(r.returns)
    cov = np.empty((N, N))
    for i in range(N):
        for j in range(i, N):
            cov[i, j] = cov[j, i] = (dev[:, i] @ dev[:, j]) / denom
    return SymMatrix(cov)


def build_model(p: AlignedPrices, source: str = "close", divisor: str = "sample") -> MarketModel:
    r = daily_returns(p, source)
    return MarketModel(r.asset_ids, mean_vector(r), covariance_matrix(r, divisor), r.observations)
