"""Symmetric random seeds with a prescribed number of vanishing moments.

A seed of odd length n is laid out as ``[wing, middle, reversed(wing)]``.
The wing holds ``(n - p) / 2`` random draws; the p middle samples are solved
from a small Vandermonde system so that moments 0..p-1 cancel. Because the
layout is mirror symmetric, every odd moment vanishes as well.
"""
import math
import warnings
from dataclasses import dataclass

import numpy as np

from ._validation import check_array_1d, check_int, check_positive
from .exceptions import ParityError, SingularMatrixError, ValidationError
from .moments import node_powers
from .seedseq import SeedSequence, default_delta

__all__ = [
    "ConstructionSystem",
    "ConditioningWarning",
    "assemble_system",
    "solve_dense",
    "build_symmetric_wavelet",
    "PRACTICAL_MAX_ORDER",
]

# Past this order the node-power system loses most of float64's precision.
PRACTICAL_MAX_ORDER = 13
CONDITION_WARN = 1e12


class ConditioningWarning(RuntimeWarning):
    pass


@dataclass(frozen=True)
class ConstructionSystem:
    M: np.ndarray
    c: np.ndarray
    nodes: tuple
    wing: tuple
    n: int
    x: np.ndarray = None

    @property
    def p(self):
        return len(self.nodes)

    @property
    def solved(self):
        return self.x is not None

    def to_dict(self):
        return {
            "n": self.n,
            "p": self.p,
            "M": [[float(v) for v in row] for row in self.M],
            "c": [float(v) for v in self.c],
            "x": None if self.x is None else [float(v) for v in self.x],
            "nodes": [int(k) for k in self.nodes],
            "wing": [float(v) for v in self.wing],
        }

    @classmethod
    def from_dict(cls, data):
        x = data.get("x")
        return cls(
            M=np.asarray(data["M"], dtype=float),
            c=np.asarray(data["c"], dtype=float),
            nodes=tuple(int(k) for k in data["nodes"]),
            wing=tuple(float(v) for v in data["wing"]),
            n=int(data["n"]),
            x=None if x is None else np.asarray(x, dtype=float),
        )


def check_construction_params(n, p):
    n = check_int(n, "n", minimum=3)
    p = check_int(p, "p", minimum=1)
    if n % 2 == 0:
        raise ParityError(f"seed length n must be odd, got n={n}")
    if p >= n:
        raise ValidationError(
            f"need p < n for a nonzero seed (a length-n seed has fewer than n vanishing moments); got p={p}, n={n}"
        )
    if p % 2 == 0:
        raise ParityError(
            f"p must be odd so the middle block has p symmetric nodes (n - p even); got p={p}. "
            f"Request p={p + 1} instead; the symmetric construction then gives at least {p + 1} vanishing moments."
        )
    return n, p


def assemble_system(u_R, n, p):
    """Build (without solving) the middle-block system for wing `u_R`."""
    n, p = check_construction_params(n, p)
    l = (n - 1) // 2
    l_R = (n - p) // 2
    wing = check_array_1d(u_R, "u_R", min_length=0)
    if wing.size != l_R:
        raise ValidationError(f"wing length must be (n - p)/2 = {l_R}, got {wing.size}")

    half = l - l_R
    nodes = np.arange(-half, half + 1)
    M = np.vstack([node_powers(nodes, i) for i in range(p)])
    wing_nodes = np.arange(-l, -l + l_R)
    c = np.zeros(p)
    for i in range(0, p, 2):
        c[i] = -2.0 * np.sum(node_powers(wing_nodes, i) * wing)
    return ConstructionSystem(M=M, c=c, nodes=tuple(int(k) for k in nodes), wing=tuple(wing.tolist()), n=n)


def solve_dense(M, c):
    """Solve ``M x = c`` by Gaussian elimination with scaled partial pivoting.

    Rows are first divided by their largest entry; pivots are chosen by
    magnitude in the scaled matrix, and a pivot below ``1e-13 * ||M||_inf``
    (of the scaled matrix) is treated as singular.
    """
    A = np.array(M, dtype=float)
    b = np.array(c, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValidationError(f"M must be square, got shape {A.shape}")
    if b.shape != (A.shape[0],):
        raise ValidationError(f"c must have length {A.shape[0]}, got shape {b.shape}")
    if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b))):
        raise ValidationError("M and c must be finite")

    size = A.shape[0]
    row_scale = np.max(np.abs(A), axis=1)
    if np.any(row_scale == 0):
        raise SingularMatrixError("M has an all-zero row")
    A /= row_scale[:, None]
    b /= row_scale
    threshold = 1e-13 * np.max(np.sum(np.abs(A), axis=1))

    for k in range(size):
        piv = k + int(np.argmax(np.abs(A[k:, k])))
        if abs(A[piv, k]) < threshold:
            raise SingularMatrixError(f"matrix is singular to working precision (column {k})")
        if piv != k:
            A[[k, piv]] = A[[piv, k]]
            b[[k, piv]] = b[[piv, k]]
        factors = A[k + 1 :, k] / A[k, k]
        A[k + 1 :, k:] -= factors[:, None] * A[k, k:]
        b[k + 1 :] -= factors * b[k]

    x = np.zeros(size)
    for k in range(size - 1, -1, -1):
        x[k] = (b[k] - A[k, k + 1 :] @ x[k + 1 :]) / A[k, k]
    return x


def _draw_wing(l_R, variance, rng_seed):
    rng = np.random.Generator(np.random.PCG64(rng_seed))
    return rng.standard_normal(l_R) * math.sqrt(variance)


def build_symmetric_wavelet(n, p, variance=1.0, rng_seed=0, *, delta=None, t0=None, wing=None):
    """Random symmetric seed of length n with at least p vanishing moments.

    The wing is ``(n - p) / 2`` Gaussian draws with the given variance from a
    PCG64 stream seeded by `rng_seed`, unless `wing` is passed explicitly.
    The seed spans [-1, 1] unless `delta` is given; `t0` defaults to the
    centered origin.

    Returns ``(seed, system)``.
    """
    n, p = check_construction_params(n, p)
    variance = check_positive(variance, "variance")
    rng_seed = check_int(rng_seed, "rng_seed", minimum=0)
    l = (n - 1) // 2
    l_R = (n - p) // 2
    delta = default_delta(n) if delta is None else check_positive(delta, "delta")
    t0 = -l * delta if t0 is None else float(t0)

    u_R = _draw_wing(l_R, variance, rng_seed) if wing is None else check_array_1d(wing, "wing", min_length=0)
    system = assemble_system(u_R, n, p)
    cond = np.linalg.cond(system.M)
    if cond > CONDITION_WARN:
        warnings.warn(
            f"moment system for p={p} has condition number {cond:.3g}; "
            f"results past p={PRACTICAL_MAX_ORDER} are unreliable",
            ConditioningWarning,
            stacklevel=2,
        )
    x = solve_dense(system.M, system.c)
    system = ConstructionSystem(M=system.M, c=system.c, nodes=system.nodes, wing=system.wing, n=n, x=x)

    # The reversed solution also solves the system (odd rows have c = 0), so
    # averaging the two keeps the moments and makes the seed exactly mirror
    # symmetric. `system.x` keeps the raw solution.
    middle = 0.5 * (x + x[::-1])
    wing_vals = np.asarray(system.wing)
    values = np.concatenate([wing_vals, middle, wing_vals[::-1]])
    return SeedSequence(tuple(values.tolist()), delta, t0), system
