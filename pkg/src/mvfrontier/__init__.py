"""Mean-variance portfolio analytics from historical price files."""

from .errors import (
    AdjustedUnavailable,
    BadRange,
    BadRow,
    DataError,
    DegenerateFrontier,
    DimensionMismatch,
    DuplicateDate,
    EmptyIntersection,
    InsufficientData,
    MissingColumn,
    NonpositiveB,
    NotPositiveDefinite,
    NumericalError,
)
from .frontier import (
    FrontierScalars,
    HyperbolaParams,
    Portfolio,
    efficient_frontier_allocation,
    frontier_coefficients,
    frontier_sample,
    frontier_scalars,
    frontier_variance,
    hyperbola_params,
    min_variance_portfolio,
    optimal_portfolio,
    tangency_portfolio,
)
from .linalg import CholeskyFactor, SymMatrix, cholesky, dot, quad_form, solve_spd
from .market_data import AlignedPrices, PriceRow, PriceSeries, align, parse_price_csv, read_price_csv
from .modelfile import load_model, save_model
from .returns import MarketModel, ReturnsPanel, build_model, covariance_matrix, daily_returns, mean_vector

__version__ = "0.1.0"

__all__ = [
    "AdjustedUnavailable",
    "AlignedPrices",
    "BadRange",
    "BadRow",
    "CholeskyFactor",
    "DataError",
    "DegenerateFrontier",
    "DimensionMismatch",
    "DuplicateDate",
    "EmptyIntersection",
    "FrontierScalars",
    "HyperbolaParams",
    "InsufficientData",
    "MarketModel",
    "MissingColumn",
    "NonpositiveB",
    "NotPositiveDefinite",
    "NumericalError",
    "Portfolio",
    "PriceRow",
    "PriceSeries",
    "ReturnsPanel",
    "SymMatrix",
    "align",
    "build_model",
    "cholesky",
    "covariance_matrix",
    "daily_returns",
    "dot",
    "efficient_frontier_allocation",
    "frontier_coefficients",
    "frontier_sample",
    "frontier_scalars",
    "frontier_variance",
    "hyperbola_params",
    "load_model",
    "mean_vector",
    "min_variance_portfolio",
    "optimal_portfolio",
    "parse_price_csv",
    "quad_form",
    "read_price_csv",
    "save_model",
    "solve_spd",
    "tangency_portfolio",
]
