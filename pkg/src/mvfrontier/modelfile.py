"""JSON serialization of :class:`MarketModel`.

Layout (keys always in this order)::

    {
      "asset_ids": ["CVX", "MSFT"],
      "mu": [0.03, 0.04],
      "sigma": [1.85, 0.85, 0.85, 2.09],
      "observations": 1333,
      "units": {"mu": "percent/day", "sigma": "percent^2/day"}
    }

``sigma`` is row-major. Floats are written with full ``repr`` precision so a
dump/load cycle is exact.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import DataError
from .returns import MarketModel

MU_UNITS = "percent/day"
SIGMA_UNITS = "percent^2/day"
SYMMETRY_TOL = 1e-12


def model_to_dict(model: MarketModel) -> dict:
    return {
        "asset_ids": list(model.asset_ids),
        "mu": [float(x) for x in model.mu],
        "sigma": [float(x) for x in model.sigma.entries.ravel()],
        "observations": model.observations,
        "units": {"mu": MU_UNITS, "sigma": SIGMA_UNITS},
    }


def dumps_model(model: MarketModel) -> str:
    return json.dumps(model_to_dict(model), indent=2) + "\n"


def model_from_dict(obj) -> MarketModel:
    if not isinstance(obj, dict):
        raise DataError("model file must hold a JSON object")
    missing = [k for k in ("asset_ids", "mu", "sigma") if k not in obj]
    if missing:
        raise DataError(f"model file lacks field(s): {', '.join(missing)}")
    units = obj.get("units", {})
    if units.get("mu", MU_UNITS) != MU_UNITS or units.get("sigma", SIGMA_UNITS) != SIGMA_UNITS:
        raise DataError(f"model units {units} do not match {MU_UNITS!r} / {SIGMA_UNITS!r}")

    ids = obj["asset_ids"]
    if not isinstance(ids, list) or not ids or not all(isinstance(i, str) for i in ids):
        raise DataError("asset_ids must be a non-empty list of strings")
    n = len(ids)
    try:
        mu = np.array(obj["mu"], dtype=np.float64)
        sigma = np.array(obj["sigma"], dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise DataError(f"non-numeric mu or sigma: {exc}") from None
    if mu.shape != (n,):
        raise DataError(f"mu has {mu.size} entries for {n} assets")
    if sigma.shape != (n * n,):
        raise DataError(f"sigma has {sigma.size} entries, expected {n * n}")
    if not (np.all(np.isfinite(mu)) and np.all(np.isfinite(sigma))):
        raise DataError("mu and sigma must be finite")
    sigma = sigma.reshape(n, n)
    scale = max(float(np.max(np.abs(sigma))), 1e-300)
    if np.max(np.abs(sigma - sigma.T)) > SYMMETRY_TOL * scale:
        raise DataError("sigma is not symmetric")
    if np.any(sigma.diagonal() < 0):
        raise DataError("sigma has a negative variance")

    obs = obj.get("observations")
    if obs is not None and (not isinstance(obs, int) or isinstance(obs, bool) or obs < 0):
        raise DataError(f"observations must be a non-negative integer or null, got {obs!r}")
    return MarketModel(tuple(ids), mu, sigma, obs)


def loads_model(text: str) -> MarketModel:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataError(f"model file is not valid JSON: {exc}") from None
    return model_from_dict(obj)


def load_model(path) -> MarketModel:
    return loads_model(Path(path).read_text(encoding="utf-8"))


def save_model(model: MarketModel, path) -> None:
    Path(path).write_text(dumps_model(model), encoding="utf-8")
