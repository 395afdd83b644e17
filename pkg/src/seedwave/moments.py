"""Vanishing moments of seed wavelets.

The m-th time moment of the wavelet equals ``delta**(m+1) * sum_k k**m u[k]``
for a centered seed, so moment questions reduce to weighted sums over the
seed and to the matrix of node powers ``k**m``.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from ._validation import check_int, check_positive
from .exceptions import DegenerateInputError, ValidationError
from .quadrature import central_difference, richardson
from .seedseq import SeedSequence, _require_centered
from .wavelet import SeedWavelet, spectrum

__all__ = [
    "MomentReport",
    "MAX_MOMENT_ORDER",
    "node_powers",
    "analytic_moment",
    "vanishing_order",
    "moment_matrix",
    "moment_fd_oracle",
    "moment_fd_estimate",
]

MAX_MOMENT_ORDER = 64
DEFAULT_MOMENT_TOL = 1e-9


@dataclass(frozen=True)
class MomentReport:
    moments: tuple
    vanishing_order: int
    tolerance: float
    scales: tuple = field(default=(), compare=False)

    def to_dict(self):
        return {
            "moments": list(self.moments),
            "vanishing_order": self.vanishing_order,
            "tolerance": self.tolerance,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(float(m) for m in data["moments"]), int(data["vanishing_order"]), float(data["tolerance"]))


def node_powers(nodes, m):
    """``nodes**m`` by repeated multiplication in float64, with 0**0 = 1."""
    nodes = np.asarray(nodes, dtype=float)
    out = np.ones_like(nodes)
    for _ in range(m):
        out = out * nodes
    return out


def _seed(seq):
    return seq.seed if isinstance(seq, SeedWavelet) else seq


def _moment_terms(seq, m):
    return node_powers(seq.indices, m) * np.asarray(seq.values)


def analytic_moment(seq, m):
    """``delta**(m+1) * sum_k k**m u[k]``, i.e. the m-th time moment of the wavelet."""
    seq = _seed(seq)
    _require_centered(seq)
    m = check_int(m, "m", minimum=0, maximum=MAX_MOMENT_ORDER)
    # numpy's sum is pairwise
    return float(seq.delta ** (m + 1) * np.sum(_moment_terms(seq, m)))


def vanishing_order(seq, tol=DEFAULT_MOMENT_TOL, max_order=None):
    """Number of leading moments that vanish.

    Moment m counts as zero when its magnitude is at most ``tol`` times
    ``delta**(m+1) * sum_k |k**m u[k]|``. The scan stops at the first
    nonzero moment, or at m = n. `max_order` asks for moments up to that
    order to be listed even past the first nonzero one.
    """
    seq = _seed(seq)
    _require_centered(seq)
    tol = check_positive(tol, "tol")
    if not any(seq.values):
        raise DegenerateInputError("every moment of the zero seed vanishes; order is undefined")
    if max_order is not None:
        max_order = check_int(max_order, "max_order", minimum=0, maximum=MAX_MOMENT_ORDER)

    moments = []
    scales = []
    order = None
    m = 0
    while True:
        terms = _moment_terms(seq, m)
        weight = seq.delta ** (m + 1)
        value = float(weight * np.sum(terms))
        scale = float(weight * np.sum(np.abs(terms)))
        moments.append(value)
        scales.append(scale)
        if order is None and abs(value) > tol * scale:
            order = m
        if order is None and m + 1 >= seq.n:
            order = seq.n
        if order is not None and (max_order is None or m >= max_order):
            break
        if m >= MAX_MOMENT_ORDER:
            break
        m += 1
    return MomentReport(tuple(moments), order, tol, tuple(scales))


def moment_matrix(l, p):
    """``p x (2l+1)`` matrix with entry (m, j) = (j - l)**m.

    Its null space is exactly the set of seeds whose wavelet has p vanishing
    moments. p = 2l+1 is accepted but the square matrix is nonsingular, so
    only the zero seed qualifies.
    """
    l = check_int(l, "l", minimum=1)
    p = check_int(p, "p", minimum=1)
    if p > 2 * l + 1:
        raise ValidationError(
            f"p={p} exceeds 2l+1={2 * l + 1}: a nonzero seed of length {2 * l + 1} "
            "has fewer than 2l+1 vanishing moments"
        )
    nodes = np.arange(-l, l + 1)
    return np.vstack([node_powers(nodes, m) for m in range(p)])


def moment_fd_oracle(w, m, h):
    """Moment m from a central finite difference of the closed-form spectrum.

    Uses ``integral t**m psi(t) dt = j**m F^(m)(0)``; independent of the
    summation formula in :func:`analytic_moment`.
    """
    w = w if isinstance(w, SeedWavelet) else SeedWavelet(w)
    m = check_int(m, "m", minimum=0, maximum=6)
    h = check_positive(h, "h")
    if m == 0:
        return float(spectrum(w, 0.0).real)
    if not h < w.band_edge / (4 * m + 4):
        raise ValidationError(f"h must be below band_edge/(4m+4) = {w.band_edge / (4 * m + 4)!r}, got {h!r}")
    deriv = central_difference(lambda om: spectrum(w, om), 0.0, m, h)
    return float((1j**m * deriv).real)


def moment_fd_estimate(w, m, h=None, levels=3):
    """Richardson-extrapolated :func:`moment_fd_oracle`.

    The default step resolves the fastest phase in the spectrum, which turns
    once per ``2*pi / max|t_k|`` rad/s.
    """
    w = w if isinstance(w, SeedWavelet) else SeedWavelet(w)
    if m == 0:
        return moment_fd_oracle(w, 0, 1.0)
    if h is None:
        reach = max(abs(w.seed.t0), abs(w.seed.t0 + w.seed.span), w.seed.delta)
        h = min(0.2 / reach, 0.99 * w.band_edge / (4 * m + 4))
    return richardson(lambda step: moment_fd_oracle(w, m, step), h, levels=levels, order=2)
