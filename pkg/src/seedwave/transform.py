"""Continuous wavelet transform with seed wavelets.

Normalization is L2: the daughter wavelet at scale a and shift b is
``psi((t - b) / a) / sqrt(a)``, so all daughters share the mother's energy.
Coefficients are Riemann sums over the signal samples, accurate to
O(signal_delta) for smooth signals.
"""
import math
from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from ._validation import check_array_1d, check_finite_scalar, check_positive
from .exceptions import AdmissibilityError, ValidationError
from .seedseq import SeedSequence
from .wavelet import SeedWavelet, _as_wavelet, evaluate

__all__ = ["CwtGrid", "dilate_shift", "cwt", "SeedCWT"]


@dataclass(frozen=True)
class CwtGrid:
    scales: np.ndarray
    shifts: np.ndarray
    coefficients: np.ndarray
    signal_delta: float

    def __post_init__(self):
        if self.coefficients.shape != (len(self.scales), len(self.shifts)):
            raise ValidationError(
                f"coefficients shape {self.coefficients.shape} does not match "
                f"{len(self.scales)} scales x {len(self.shifts)} shifts"
            )
        if np.any(np.asarray(self.scales) <= 0):
            raise ValidationError("scales must be > 0")


def dilate_shift(w, a, b, t):
    """``psi((t - b) / a) / sqrt(a)``."""
    a = check_positive(a, "a")
    b = check_finite_scalar(b, "b")
    w = _as_wavelet(w)
    if np.ndim(t) == 0:
        return evaluate(w, (float(t) - b) / a) / math.sqrt(a)
    return evaluate(w, (np.asarray(t, dtype=float) - b) / a) / math.sqrt(a)


def _check_scales_shifts(scales, shifts):
    scales = check_array_1d(scales, "scales")
    if np.any(scales <= 0):
        raise ValidationError("scales must all be > 0")
    shifts = check_array_1d(shifts, "shifts")
    return scales, shifts


def _coefficients(signals, t, signal_delta, w, scales, shifts, block=256):
    # signals: (n_signals, n_samples) -> (n_signals, n_scales, n_shifts)
    out = np.empty((signals.shape[0], len(scales), len(shifts)))
    for i, a in enumerate(scales):
        for start in range(0, len(shifts), block):
            b = shifts[start : start + block]
            daughters = evaluate(w, (t[None, :] - b[:, None]) / a) / math.sqrt(a)
            out[:, i, start : start + block] = signal_delta * (signals @ daughters.T)
    return out


def cwt(signal, signal_delta, w, scales, shifts, t0=0.0):
    """Wavelet coefficients of a uniformly sampled signal.

    Sample i sits at ``t0 + i * signal_delta``. Returns a :class:`CwtGrid`
    with one row per scale and one column per shift.
    """
    signal = check_array_1d(signal, "signal")
    signal_delta = check_positive(signal_delta, "signal_delta")
    t0 = check_finite_scalar(t0, "t0")
    scales, shifts = _check_scales_shifts(scales, shifts)
    w = _as_wavelet(w)
    t = t0 + np.arange(signal.size) * signal_delta
    coef = _coefficients(signal[None, :], t, signal_delta, w, scales, shifts)[0]
    return CwtGrid(scales=scales, shifts=shifts, coefficients=coef, signal_delta=signal_delta)


class SeedCWT(TransformerMixin, BaseEstimator):
    """Scikit-learn transformer computing seed-wavelet CWT features.

    Each row of ``X`` is one signal sampled every ``signal_delta`` seconds
    starting at ``t0``. ``transform`` returns the flattened
    ``(n_scales * n_shifts)`` coefficient grid per row, scale-major.

    Parameters
    ----------
    seed : SeedSequence or dict
        Seed of the analyzing wavelet (a dict in the JSON seed layout works).
    scales : array-like of float
    shifts : array-like of float, optional
        Defaults to the sample times of the fitted signals.
    signal_delta : float
    t0 : float
    require_admissible : bool
        Refuse seeds whose values do not sum to zero.
    """

    def __init__(self, seed=None, scales=(1.0,), shifts=None, signal_delta=1.0, t0=0.0, require_admissible=True):
        self.seed = seed
        self.scales = scales
        self.shifts = shifts
        self.signal_delta = signal_delta
        self.t0 = t0
        self.require_admissible = require_admissible

    def fit(self, X, y=None):
        X = check_array(X, dtype=float)
        seed = self.seed
        if seed is None:
            raise ValidationError("SeedCWT needs a seed")
        if isinstance(seed, dict):
            seed = SeedSequence.from_dict(seed)
        if self.require_admissible and not seed.admissible:
            raise AdmissibilityError("analyzing seed does not sum to zero")
        delta = check_positive(self.signal_delta, "signal_delta")
        t0 = check_finite_scalar(self.t0, "t0")
        if self.shifts is None:
            shifts = t0 + np.arange(X.shape[1]) * delta
        else:
            shifts = self.shifts
        self.scales_, self.shifts_ = _check_scales_shifts(self.scales, shifts)
        self.wavelet_ = SeedWavelet(seed)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "wavelet_")
        X = check_array(X, dtype=float)
        if X.shape[1] != self.n_features_in_:
            raise ValidationError(f"X has {X.shape[1]} samples per row; fitted with {self.n_features_in_}")
        t = self.t0 + np.arange(X.shape[1]) * self.signal_delta
        coef = _coefficients(X, t, self.signal_delta, self.wavelet_, self.scales_, self.shifts_)
        return coef.reshape(X.shape[0], -1)

    def transform_grid(self, x):
        """CWT of a single signal as a :class:`CwtGrid`."""
        coef = self.transform(np.atleast_2d(x))[0]
        return CwtGrid(
            scales=self.scales_,
            shifts=self.shifts_,
            coefficients=coef.reshape(len(self.scales_), len(self.shifts_)),
            signal_delta=float(self.signal_delta),
        )
