"""Small input checks shared across modules."""
import math
import numbers

import numpy as np

from .exceptions import NonFiniteValueError, ValidationError


def check_finite_scalar(x, name):
    if isinstance(x, bool) or not isinstance(x, numbers.Real):
        raise ValidationError(f"{name} must be a real number, got {x!r}")
    x = float(x)
    if not math.isfinite(x):
        raise NonFiniteValueError(f"{name} must be finite, got {x!r}")
    return x


def check_positive(x, name):
    x = check_finite_scalar(x, name)
    if x <= 0:
        raise ValidationError(f"{name} must be > 0, got {x!r}")
    return x


def check_int(x, name, minimum=None, maximum=None):
    if isinstance(x, bool) or not isinstance(x, numbers.Integral):
        raise ValidationError(f"{name} must be an integer, got {x!r}")
    x = int(x)
    if minimum is not None and x < minimum:
        raise ValidationError(f"{name} must be >= {minimum}, got {x}")
    if maximum is not None and x > maximum:
        raise ValidationError(f"{name} must be <= {maximum}, got {x}")
    return x


def check_array_1d(values, name, min_length=1):
    """Return `values` as a finite float64 1-d array."""
    try:
        arr = np.asarray(values, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"{name} must be a sequence of reals") from exc
    if arr.ndim != 1:
        raise ValidationError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size < min_length:
        raise ValidationError(f"{name} needs at least {min_length} entries, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteValueError(f"{name} contains non-finite entries")
    return arr
