"""Continuous wavelets obtained by sinc-interpolating a seed sequence."""
import math
from dataclasses import dataclass

import numpy as np

from ._validation import check_finite_scalar, check_int
from .exceptions import AdmissibilityError, DegenerateInputError, NonFiniteValueError, ValidationError
from .quadrature import QuadratureConfig, integrate
from .seedseq import SeedSequence

__all__ = [
    "SeedWavelet",
    "sinc",
    "evaluate",
    "evaluate_grid",
    "spectrum",
    "energy",
    "admissibility_constant",
]

# Below this |x| the Taylor series of sin(x)/x is used; truncation error < 1e-24.
SINC_SERIES_THRESHOLD = 1e-4


def sinc(x):
    """Unnormalized sinc, sin(x)/x, with sinc(0) = 1."""
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    small = np.abs(x) < SINC_SERIES_THRESHOLD
    xs = x[small]
    x2 = xs * xs
    out[small] = 1.0 - x2 / 6.0 + x2 * x2 / 120.0
    xl = x[~small]
    out[~small] = np.sin(xl) / xl
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class SeedWavelet:
    """The band-limited function ``sum_k u[k] * sinc(band_edge * (t - t_k))``."""

    seed: SeedSequence

    def __post_init__(self):
        if not isinstance(self.seed, SeedSequence):
            raise ValidationError("SeedWavelet needs a SeedSequence")

    @property
    def band_edge(self):
        return math.pi / self.seed.delta

    @property
    def time_support(self):
        return (self.seed.t0, self.seed.t0 + self.seed.span)

    @property
    def center(self):
        lo, hi = self.time_support
        return 0.5 * (lo + hi)

    def __call__(self, t):
        return evaluate(self, t)


def _as_wavelet(w):
    if isinstance(w, SeedSequence):
        return SeedWavelet(w)
    return w


def _evaluate_array(w, t):
    seed = w.seed
    u = np.asarray(seed.values)
    # (t - t_k) / delta, measured in sample periods
    offsets = (t[..., None] - seed.t0) / seed.delta - np.arange(seed.n)
    return sinc(math.pi * offsets) @ u


def evaluate(w, t):
    """Wavelet value at time(s) `t`.

    Accepts a scalar or an array; an array input returns an array of the
    same shape.
    """
    w = _as_wavelet(w)
    if np.ndim(t) == 0:
        t = check_finite_scalar(t, "t")
        return float(_evaluate_array(w, np.asarray(t)))
    t = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t)):
        raise NonFiniteValueError("evaluation times must be finite")
    return _evaluate_array(w, t)


def evaluate_grid(w, t_start, t_end, num_points):
    """Sample the wavelet on ``num_points`` equally spaced times, endpoints included.

    Returns an ``(num_points, 2)`` array of ``(t, psi(t))`` rows.
    """
    t_start = check_finite_scalar(t_start, "t_start")
    t_end = check_finite_scalar(t_end, "t_end")
    if not t_start < t_end:
        raise ValidationError(f"need t_start < t_end, got {t_start!r}, {t_end!r}")
    num_points = check_int(num_points, "num_points", minimum=2)
    t = np.linspace(t_start, t_end, num_points)
    return np.column_stack([t, evaluate(w, t)])


def spectrum(w, omega):
    """Fourier transform of the wavelet at angular frequency `omega`.

    In band (|omega| <= pi/delta, edge included) this is
    ``delta * sum_k u[k] exp(-1j * omega * t_k)``; outside it is exactly 0.
    """
    w = _as_wavelet(w)
    scalar = np.ndim(omega) == 0
    if scalar:
        omega = check_finite_scalar(omega, "omega")
    om = np.atleast_1d(np.asarray(omega, dtype=float))
    if not np.all(np.isfinite(om)):
        raise NonFiniteValueError("omega must be finite")
    seed = w.seed
    out = np.zeros(om.shape, dtype=complex)
    inband = np.abs(om) <= w.band_edge
    if np.any(inband):
        phase = np.exp(-1j * om[inband, None] * seed.times)
        out[inband] = seed.delta * (phase @ np.asarray(seed.values))
    return complex(out[0]) if scalar else out.reshape(np.shape(omega))


def energy(w):
    """Squared L2 norm, ``delta * sum(u**2)`` (shifted sincs are orthogonal)."""
    w = _as_wavelet(w)
    return w.seed.delta * math.fsum(v * v for v in w.seed.values)


def admissibility_integrand(w):
    """``|F(omega)|**2 / omega`` on [0, band_edge], continuously extended by 0 at omega = 0."""
    w = _as_wavelet(w)

    def integrand(omega):
        om = np.asarray(omega, dtype=float)
        power = np.abs(spectrum(w, om)) ** 2
        with np.errstate(divide="ignore", invalid="ignore"):
            out = np.where(om > 0, power / np.where(om > 0, om, 1.0), 0.0)
        return out

    return integrand


def admissibility_constant(w, quad=None, *, return_error=False):
    """Admissibility constant C = integral over (0, inf) of |F|^2 / omega.

    The spectrum vanishes past the band edge, so the integral runs over
    [0, pi/delta] only. Raises :class:`AdmissibilityError` unless the seed
    sums to zero, since the integrand then blows up like 1/omega at 0.
    """
    w = _as_wavelet(w)
    seed = w.seed
    if not any(seed.values):
        raise DegenerateInputError("admissibility constant of the zero seed is undefined")
    if not seed.admissible:
        raise AdmissibilityError(
            f"seed values sum to {math.fsum(seed.values)!r}; a zero sum is required for admissibility"
        )
    quad = QuadratureConfig() if quad is None else quad
    # one breakpoint per sample keeps the initial partition finer than the
    # oscillation of the trigonometric sum
    points = np.linspace(0.0, w.band_edge, seed.n + 1)[1:-1]
    value, err = integrate(
        admissibility_integrand(w), 0.0, w.band_edge, quad, points=points, vectorized=True
    )
    return (value, err) if return_error else value
