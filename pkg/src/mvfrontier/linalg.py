"""Dense symmetric positive-definite linear algebra for small systems.

Vectors are plain 1-D float64 numpy arrays. ``SymMatrix`` guarantees exact
symmetry. Inverses are never formed: anything of the form ``inv(S) @ v`` goes
through :func:`cholesky` followed by :func:`solve_spd`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotPositiveDefinite

# Pivot threshold relative to the largest diagonal entry.
PD_RTOL = 1e-12
# Largest tolerated asymmetry, relative to max |entry|, before construction refuses.
SYMMETRY_RTOL = 1e-10


def _frozen(a):
    a = np.array(a, dtype=np.float64)
    a.setflags(write=False)
    return a


def as_vector(x) -> np.ndarray:
    """Return ``x`` as a read-only 1-D float64 array with at least one entry."""
    v = _frozen(x)
    if v.ndim != 1 or v.size == 0:
        raise DimensionMismatch(f"expected a non-empty 1-D vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector has non-finite entries")
    return v


class SymMatrix:
    """Immutable symmetric ``n x n`` matrix.

    Input that is symmetric up to rounding noise is averaged with its
    transpose, so ``entries[i, j] == entries[j, i]`` holds bit for bit.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries):
        a = np.array(entries, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise DimensionMismatch(f"expected a non-empty square matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise ValueError("matrix has non-finite entries")
        scale = float(np.max(np.abs(a))) if a.size else 0.0
        if np.max(np.abs(a - a.T)) > SYMMETRY_RTOL * max(scale, 1e-300):
            raise ValueError("matrix is not symmetric")
        a = 0.5 * (a + a.T)
        a.setflags(write=False)
        self._entries = a

    @classmethod
    def identity(cls, n: int) -> "SymMatrix":
        return cls(np.eye(n))

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def n(self) -> int:
        return self._entries.shape[0]

    def diagonal(self) -> np.ndarray:
        return self._entries.diagonal()

    def __matmul__(self, x):
        return matvec(self, x)

    def __eq__(self, other):
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return np.array_equal(self._entries, other._entries)

    def __hash__(self):
        return hash(self._entries.tobytes())

    def __repr__(self):
        return f"SymMatrix({self._entries.tolist()!r})"


@dataclass(frozen=True, eq=False)
class CholeskyFactor:
    """Lower-triangular ``L`` with ``L @ L.T`` equal to the source matrix."""

    lower: np.ndarray

    @property
    def n(self) -> int:
        return self.lower.shape[0]

    def reconstruct(self) -> np.ndarray:
        return self.lower @ self.lower.T


def _check_dims(n, x, what="vector"):
    if x.shape[0] != n:
        raise DimensionMismatch(f"{what} has length {x.shape[0]}, expected {n}")


def cholesky(m: SymMatrix) -> CholeskyFactor:
    """Factor ``m = L L^T``.

    Raises
    ------
    NotPositiveDefinite
        If some pivot is at or below ``PD_RTOL`` times the largest diagonal
        entry, e.g. a duplicated asset or a constant price series.
    """
    a = m.entries
    n = m.n
    eps = PD_RTOL * float(np.max(a.diagonal()))
    L = np.zeros((n, n))
    for j in range(n):
        row = L[j, :j]
        pivot = a[j, j] - row @ row
        if not pivot > eps:
            raise NotPositiveDefinite(
                f"matrix is not positive definite (pivot {j} = {pivot:.3e}, threshold {eps:.3e})"
            )
        L[j, j] = math.sqrt(pivot)
        L[j + 1:, j] = (a[j + 1:, j] - L[j + 1:, :j] @ row) / L[j, j]
    L.setflags(write=False)
    return CholeskyFactor(L)


def solve_spd(f: CholeskyFactor, v) -> np.ndarray:
    """Solve ``(L L^T) x = v`` by forward then backward substitution."""
    v = as_vector(v)
    n = f.n
    _check_dims(n, v)
    L = f.lower
    y = np.empty(n)
    for i in range(n):
        y[i] = (v[i] - L[i, :i] @ y[:i]) / L[i, i]
    x = np.empty(n)
    for i in range(n - 1, -1, -1):
        x[i] = (y[i] - L[i + 1:, i] @ x[i + 1:]) / L[i, i]
    x.setflags(write=False)
    return x


def matvec(m: SymMatrix, x) -> np.ndarray:
    x = as_vector(x)
    _check_dims(m.n, x)
    return m.entries @ x


def quad_form(m: SymMatrix, x) -> float:
    """``x^T m x``."""
    x = as_vector(x)
    _check_dims(m.n, x)
    return float(x @ (m.entries @ x))


def dot(x, y) -> float:
    x = as_vector(x)
    y = as_vector(y)
    _check_dims(x.shape[0], y, "second vector")
    return float(x @ y)
