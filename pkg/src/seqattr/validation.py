"""Input validation helpers.

Sequence inputs are 3-d float arrays of shape (n_samples, seq_len,
n_features); scikit-learn's own ``check_array`` stops at 2-d, so the
checks here fill that gap.
"""

from __future__ import annotations

import numpy as np

from .exceptions import ConfigurationError, DataError, NumericError


def as_float_array(values, name: str) -> np.ndarray:
    """Convert to a C-contiguous float64 array, rejecting non-finite entries."""
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise NumericError(f"{name} contains NaN or Inf")
    return arr

def check_sequences(X, n_features: int | None = None) -> np.ndarray:
    """Validate a batch of sequences, returning it as (N, T, F) float64."""
    arr = as_float_array(X, "X")
    if arr.ndim == 2:
        arr = arr[np.newaxis]
    if arr.ndim != 3:
        raise ConfigurationError(
            f"expected sequences of shape (n_samples, seq_len, n_features), got ndim={arr.ndim}"
        )
    if n_features is not None and arr.shape[2] != n_features:
        raise ConfigurationError(
            f"sequence batch has {arr.shape[2]} features, model expects {n_features}"
        )
    return arr

def check_targets(y, n_samples: int) -> np.ndarray:
    arr = as_float_array(y, "y").reshape(-1)
    if arr.shape[0] != n_samples:
        raise DataError(f"got {arr.shape[0]} targets for {n_samples} sequences")
    return arr

def check_positive(value, name: str, *, strict: bool = True) -> None:
    ok = value > 0 if strict else value >= 0
    if not ok:
        bound = "> 0" if strict else ">= 0"
        raise ConfigurationError(f"{name} must be {bound}, got {value!r}")

def check_count(value, name: str, minimum: int = 1) -> int:
    if int(value) != value or value < minimum:
        raise ConfigurationError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return int(value)
