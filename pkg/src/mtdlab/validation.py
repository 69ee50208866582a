"""Small input-validation helpers shared across the package."""

import numpy as np


class DimensionError(ValueError):
    """Shape or length of an input does not match what the operation needs."""


def as_vector(x, name="x"):
    """Coerce to a finite 1-D float64 array."""
    v = np.asarray(x, dtype=np.float64)
    if v.ndim != 1:
        raise DimensionError(f"{name} must be 1-D, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} contains non-finite entries")
    return v


def as_matrix(x, name="X"):
    """Coerce to a finite 2-D float64 array."""
    m = np.asarray(x, dtype=np.float64)
    if m.ndim != 2:
        raise DimensionError(f"{name} must be 2-D, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} contains non-finite entries")
    return m


def check_length(v, expected, name="x"):
    if len(v) != expected:
        raise DimensionError(f"{name} has length {len(v)}, expected {expected}")


def check_simplex(v, name="p", tol=1e-6):
    """Validate a probability vector: nonnegative entries summing to one."""
    v = as_vector(v, name)
    if np.any(v < -1e-9):
        raise ValueError(f"{name} has negative entries")
    s = float(v.sum())
    if abs(s - 1.0) > tol:
        raise ValueError(f"{name} sums to {s!r}, expected 1 within {tol}")
    return v


def check_box(X, lo, hi, name="X", tol=1e-9):
    """Validate that all entries lie inside [lo, hi]."""
    a = np.asarray(X, dtype=np.float64)
    if a.size and (a.min() < lo - tol or a.max() > hi + tol):
        raise ValueError(f"{name} has entries outside [{lo}, {hi}]")
    return a


def check_positive(value, name):
    if not value > 0:
        raise ValueError(f"{name} must be positive, got {value!r}")
    return value
