"""Seed sequences: finite, uniformly sampled real sequences that generate wavelets."""
import math
from dataclasses import dataclass

import numpy as np

from ._validation import check_finite_scalar, check_int, check_positive
from .exceptions import (
    NonFiniteValueError,
    NotCenteredError,
    ParityError,
    SamplingPeriodError,
    SequenceLengthError,
    ValidationError,
)

__all__ = [
    "SeedSequence",
    "new_seed",
    "mean",
    "random_seed",
    "reverse",
    "decompose_even_odd",
    "default_delta",
]


@dataclass(frozen=True)
class SeedSequence:
    """Samples ``values[k]`` taken at times ``t0 + k * delta``.

    Use :func:`new_seed` (or the constructor, which runs the same checks).
    Zero mean is *not* required here; see :attr:`admissible`.
    """

    values: tuple
    delta: float
    t0: float = 0.0

    def __post_init__(self):
        try:
            vals = tuple(float(v) for v in self.values)
        except (TypeError, ValueError) as exc:
            raise ValidationError("seed values must be real numbers") from exc
        if len(vals) < 2:
            raise SequenceLengthError(f"a seed needs at least 2 values, got {len(vals)}")
        if not all(math.isfinite(v) for v in vals):
            raise NonFiniteValueError("seed values must all be finite")
        try:
            delta = float(self.delta)
        except (TypeError, ValueError) as exc:
            raise SamplingPeriodError(f"delta must be a real number, got {self.delta!r}") from exc
        if not math.isfinite(delta) or delta <= 0:
            raise SamplingPeriodError(f"delta must be finite and > 0, got {delta!r}")
        t0 = check_finite_scalar(self.t0, "t0")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "t0", t0)

    @property
    def n(self):
        return len(self.values)

    @property
    def array(self):
        arr = np.array(self.values, dtype=float)
        arr.flags.writeable = False
        return arr

    @property
    def times(self):
        """Sample times ``t0 + k * delta``."""
        return self.t0 + np.arange(self.n) * self.delta

    @property
    def nyquist(self):
        """Band edge pi / delta in rad/s."""
        return math.pi / self.delta

    @property
    def half_length(self):
        """``l = (n - 1) / 2``; only meaningful for odd n."""
        return (self.n - 1) // 2

    @property
    def span(self):
        """Total time covered by the samples, ``(n - 1) * delta``."""
        return (self.n - 1) * self.delta

    @property
    def centered(self):
        if self.n % 2 == 0:
            return False
        expected = -self.half_length * self.delta
        return math.isclose(self.t0, expected, rel_tol=1e-12, abs_tol=1e-12 * self.delta)

    @property
    def indices(self):
        """Integer labels k = -l..l for a centered seed."""
        _require_centered(self)
        return np.arange(-self.half_length, self.half_length + 1)

    @property
    def admissible_tolerance(self):
        return 1e-12 * self.n * max(1.0, max(abs(v) for v in self.values))

    @property
    def admissible(self):
        return abs(math.fsum(self.values)) <= self.admissible_tolerance

    def with_values(self, values):
        return SeedSequence(tuple(values), self.delta, self.t0)

    def to_dict(self):
        return {"values": list(self.values), "delta": self.delta, "t0": self.t0}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(tuple(data["values"]), data["delta"], data.get("t0", 0.0))
        except KeyError as exc:
            raise ValidationError(f"seed record is missing field {exc.args[0]!r}") from exc


def new_seed(values, delta, t0=0.0):
    return SeedSequence(tuple(values), delta, t0)


def mean(seq):
    return math.fsum(seq.values) / seq.n


def default_delta(n):
    """Sampling period that spreads n samples over [-1, 1]."""
    return 2.0 / (n - 1)


def random_seed(n, variance, rng_seed, delta=None):
    """Centered zero-mean Gaussian seed.

    Draws come from numpy's PCG64 generator seeded with `rng_seed`; the
    sample mean is then subtracted so the values sum to zero up to rounding.
    Without `delta` the samples span [-1, 1].
    """
    n = check_int(n, "n")
    if n < 3:
        raise SequenceLengthError(f"random seeds need n >= 3, got {n}")
    if n % 2 == 0:
        raise ParityError(f"random seeds need odd n, got {n}")
    variance = check_positive(variance, "variance")
    rng_seed = check_int(rng_seed, "rng_seed", minimum=0)
    delta = default_delta(n) if delta is None else check_positive(delta, "delta")

    rng = np.random.Generator(np.random.PCG64(rng_seed))
    draws = rng.standard_normal(n) * math.sqrt(variance)
    draws = draws - draws.mean()
    l = (n - 1) // 2
    return SeedSequence(tuple(draws.tolist()), delta, -l * delta)


def reverse(seq):
    return SeedSequence(seq.values[::-1], seq.delta, seq.t0)


def decompose_even_odd(seq):
    """Split a centered seed into symmetric and antisymmetric halves.

    Returns ``(even, odd)`` with ``even + odd == seq`` elementwise.
    """
    _require_centered(seq)
    u = np.array(seq.values)
    u_inv = u[::-1]
    even = 0.5 * (u + u_inv)
    odd = 0.5 * (u - u_inv)
    return seq.with_values(even.tolist()), seq.with_values(odd.tolist())


def _require_centered(seq):
    if not seq.centered:
        raise NotCenteredError(
            "operation needs a centered seed (odd length, t0 = -(n-1)/2 * delta); "
            f"got n={seq.n}, t0={seq.t0!r}, delta={seq.delta!r}"
        )
