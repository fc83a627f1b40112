"""Input validation helpers shared by the estimator and the CLI."""
import numpy as np
from sklearn.utils.validation import check_array

from .exceptions import DomainError


def check_frequencies(X):
    """Return a flat float array of positive dimensionless frequencies.

    Accepts a 1-d array-like or a single-column 2-d array.
    """
    X = check_array(X, ensure_2d=False, dtype=np.float64, input_name="X")
    if X.ndim == 2:
        if X.shape[1] != 1:
            raise DomainError(f"expected a single column of Omega values, got {X.shape[1]}")
        X = X[:, 0]
    if np.any(X <= 0):
        raise DomainError("Omega values must be positive")
    return X


def check_positive(value, name):
    value = float(value)
    if not (np.isfinite(value) and value > 0):
        raise DomainError(f"{name} must be positive, got {value!r}")
    return value


def check_fraction(value, name):
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {value!r}")
    return value


def check_non_negative(value, name):
    value = float(value)
    if not (np.isfinite(value) and value >= 0):
        raise DomainError(f"{name} must be non-negative, got {value!r}")
    return value
