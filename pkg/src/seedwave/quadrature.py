"""Adaptive Simpson integration and central finite differences.

These are deliberately independent of the closed-form results elsewhere in
the package: they serve as numerical oracles for energies, admissibility
constants and spectral derivatives.
"""
import math
from dataclasses import dataclass

import numpy as np

from ._validation import check_finite_scalar, check_int, check_positive
from .exceptions import ConvergenceError, NonFiniteValueError, ValidationError

__all__ = [
    "QuadratureConfig",
    "integrate",
    "central_difference",
    "richardson",
]


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-8
    abs_tol: float = 1e-12
    max_depth: int = 50

    def __post_init__(self):
        check_positive(self.rel_tol, "rel_tol")
        check_positive(self.abs_tol, "abs_tol")
        check_int(self.max_depth, "max_depth", minimum=10)


def _simpson(fa, fm, fb, width):
    return width * (fa + 4.0 * fm + fb) / 6.0


def integrate(f, a, b, cfg=None, *, points=None, vectorized=False):
    """Integrate `f` over [a, b] by adaptive Simpson.

    Each interval is compared against its two halves; the difference divided
    by 15 is the local error estimate and the Richardson-corrected value is
    kept once the estimate falls below the interval's share of the global
    tolerance. All intervals of one refinement level are evaluated together,
    so with ``vectorized=True`` `f` is called on whole arrays.

    `points` are optional interior breakpoints that seed the initial
    partition (useful for oscillatory integrands).

    Returns ``(value, error_estimate)``.
    """
    cfg = QuadratureConfig() if cfg is None else cfg
    a = check_finite_scalar(a, "a")
    b = check_finite_scalar(b, "b")
    if not a < b:
        raise ValidationError(f"need a < b, got a={a!r}, b={b!r}")

    if vectorized:
        def feval(x):
            return np.asarray(f(x), dtype=float).reshape(x.shape)
    else:
        def feval(x):
            return np.array([float(f(float(xi))) for xi in x.ravel()]).reshape(x.shape)

    edges = [a]
    if points is not None:
        edges.extend(sorted(float(p) for p in points if a < float(p) < b))
    edges.append(b)
    edges = np.unique(np.asarray(edges, dtype=float))

    lo = edges[:-1]
    hi = edges[1:]
    mid = 0.5 * (lo + hi)
    vals = feval(np.concatenate([edges, mid]))
    if not np.all(np.isfinite(vals)):
        raise NonFiniteValueError("integrand returned a non-finite value")
    f_lo = vals[: len(edges) - 1]
    f_hi = vals[1 : len(edges)]
    f_mid = vals[len(edges) :]
    whole = _simpson(f_lo, f_mid, f_hi, hi - lo)

    total_width = b - a
    accepted_value = 0.0
    accepted_error = 0.0
    pending_error = math.inf

    for _depth in range(cfg.max_depth):
        width = hi - lo
        q1 = 0.5 * (lo + mid)
        q3 = 0.5 * (mid + hi)
        fq = feval(np.concatenate([q1, q3]))
        if not np.all(np.isfinite(fq)):
            raise NonFiniteValueError("integrand returned a non-finite value")
        f_q1 = fq[: len(q1)]
        f_q3 = fq[len(q1) :]
        left = _simpson(f_lo, f_q1, f_mid, 0.5 * width)
        right = _simpson(f_mid, f_q3, f_hi, 0.5 * width)
        halves = left + right
        local_err = np.abs(halves - whole) / 15.0
        corrected = halves + (halves - whole) / 15.0

        estimate = accepted_value + math.fsum(corrected)
        budget = max(cfg.abs_tol, cfg.rel_tol * abs(estimate))
        done = local_err <= budget * width / total_width
        # never accept on the first comparison: a lucky agreement on a coarse
        # partition is common for oscillatory integrands
        if _depth == 0:
            done[:] = False

        if np.any(done):
            accepted_value += math.fsum(corrected[done])
            accepted_error += math.fsum(local_err[done])

        keep = ~done
        if not np.any(keep):
            return accepted_value, accepted_error
        pending_error = math.fsum(local_err[keep])

        # split surviving intervals
        lo_k, mid_k, hi_k = lo[keep], mid[keep], hi[keep]
        f_lo_k, f_mid_k, f_hi_k = f_lo[keep], f_mid[keep], f_hi[keep]
        f_q1_k, f_q3_k = f_q1[keep], f_q3[keep]
        left_k, right_k = left[keep], right[keep]

        lo = np.concatenate([lo_k, mid_k])
        hi = np.concatenate([mid_k, hi_k])
        mid = np.concatenate([0.5 * (lo_k + mid_k), 0.5 * (mid_k + hi_k)])
        f_lo = np.concatenate([f_lo_k, f_mid_k])
        f_hi = np.concatenate([f_mid_k, f_hi_k])
        f_mid = np.concatenate([f_q1_k, f_q3_k])
        whole = np.concatenate([left_k, right_k])

    value = accepted_value + math.fsum(whole)
    raise ConvergenceError(
        f"adaptive Simpson did not converge within max_depth={cfg.max_depth}",
        value=value,
        error_estimate=accepted_error + pending_error,
    )


# Second-order accurate central stencils, offsets -r..r.
_STENCILS = {
    1: (np.array([-0.5, 0.0, 0.5]), 1),
    2: (np.array([1.0, -2.0, 1.0]), 1),
    3: (np.array([-0.5, 1.0, 0.0, -1.0, 0.5]), 2),
    4: (np.array([1.0, -4.0, 6.0, -4.0, 1.0]), 2),
    5: (np.array([-0.5, 2.0, -2.5, 0.0, 2.5, -2.0, 0.5]), 3),
    6: (np.array([1.0, -6.0, 15.0, -20.0, 15.0, -6.0, 1.0]), 3),
}


def central_difference(f, x0, order, h):
    """Central finite-difference approximation of the `order`-th derivative.

    The stencils are second-order accurate. `f` may return complex values.
    """
    if order not in _STENCILS:
        raise ValidationError(f"order must be in 1..6, got {order!r}")
    x0 = check_finite_scalar(x0, "x0")
    h = check_positive(h, "h")
    weights, r = _STENCILS[order]
    center = f(x0)
    acc = 0.0
    # weights sum to zero, so differencing against f(x0) changes nothing
    # mathematically but makes constants come out exactly 0
    for i, w in zip(range(-r, r + 1), weights):
        if w != 0.0 and i != 0:
            acc = acc + w * (f(x0 + i * h) - center)
    return acc / h**order


def richardson(estimate, h, levels=3, order=2):
    """Richardson-extrapolate ``estimate(h)`` towards h -> 0.

    `estimate` is evaluated at h, h/2, ..., h/2**(levels-1); the leading
    error is assumed to go like h**order and successive terms like
    h**(order + 2), h**(order + 4), ... (true for central differences).
    """
    levels = check_int(levels, "levels", minimum=1)
    table = [estimate(h / 2**i) for i in range(levels)]
    power = order
    for _ in range(1, levels):
        factor = 2.0**power
        table = [(factor * table[i + 1] - table[i]) / (factor - 1.0) for i in range(len(table) - 1)]
        power += 2
    return table[0]
