"""Input validation helpers shared by the numerical modules."""

from __future__ import annotations

import numpy as np
from scipy import sparse

from .errors import DimensionMismatchError


def as_dense_float(X, name: str = "X") -> np.ndarray:
    """Coerce a matrix-like input to a dense float64 ndarray."""
    if sparse.issparse(X):
        X = X.toarray()
    arr = np.asarray(X, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return arr


def check_square(X, name: str = "W") -> np.ndarray:
    """Validate a square 2-D matrix, returning it as dense float64."""
    arr = as_dense_float(X, name)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatchError(f"{name} must be square, got shape {arr.shape}")
    return arr


def check_vector(v, n: int, name: str = "y") -> np.ndarray:
    """Validate a length-``n`` 1-D float vector."""
    arr = np.asarray(v, dtype=float).ravel()
    if arr.shape[0] != n:
        raise DimensionMismatchError(f"{name} must have length {n}, got {arr.shape[0]}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return arr


def check_nonnegative(arr: np.ndarray, name: str) -> np.ndarray:
    if np.any(arr < 0):
        raise ValueError(f"{name} must be non-negative")
    return arr


def check_unit_interval(value: float, name: str, *, open_ends: bool) -> float:
    """Validate a scalar in [0, 1] (or strictly inside when ``open_ends``)."""
    value = float(value)
    inside = 0.0 < value < 1.0 if open_ends else 0.0 <= value <= 1.0
    if not inside:
        bounds = "(0, 1)" if open_ends else "[0, 1]"
        raise ValueError(f"{name} must lie in {bounds}, got {value}")
    return value
