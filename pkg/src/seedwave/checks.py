"""Numerical cross-checks of a seed wavelet's closed-form properties."""
import math

import numpy as np

from .exceptions import AdmissibilityError, ConvergenceError, DegenerateInputError
from .moments import DEFAULT_MOMENT_TOL, vanishing_order
from .quadrature import QuadratureConfig, integrate
from .wavelet import SeedWavelet, admissibility_constant, energy, evaluate

__all__ = ["energy_by_quadrature", "interpolation_error", "verify_seed"]

ENERGY_REL_TOL = 1e-3
INTERPOLATION_REL_TOL = 1e-12
ADMISSIBILITY_REL_ERR = 1e-6


def energy_by_quadrature(w, half_width=None, cfg=None):
    """Integral of psi**2 over a symmetric window about the seed's center.

    The default half-width is ``200 * n * delta``. psi**2 decays like 1/t**2,
    so the neglected tails are O(1/half_width). The window is pre-split at
    every sample period so each panel sees less than one oscillation.

    Returns ``(value, error_estimate)``.
    """
    w = w if isinstance(w, SeedWavelet) else SeedWavelet(w)
    seed = w.seed
    if half_width is None:
        half_width = 200.0 * seed.n * seed.delta
    lo = w.center - half_width
    hi = w.center + half_width
    panels = int(math.ceil((hi - lo) / seed.delta))
    points = np.linspace(lo, hi, panels + 1)[1:-1]
    return integrate(lambda t: evaluate(w, t) ** 2, lo, hi, cfg, points=points, vectorized=True)


def interpolation_error(w):
    """``max_k |psi(t_k) - u[k]|``."""
    w = w if isinstance(w, SeedWavelet) else SeedWavelet(w)
    return float(np.max(np.abs(evaluate(w, w.seed.times) - np.asarray(w.seed.values))))


def _check(passed, **detail):
    return {"status": "pass" if passed else "fail", **detail}


def verify_seed(seed, max_order=None, min_order=None, tol=DEFAULT_MOMENT_TOL, quad=None):
    """Run every available check on `seed` and return a JSON-ready report.

    Moments are only reported for centered seeds; asking for `min_order` on
    any other seed fails that check. ``report["passed"]`` is true iff every
    check passed.
    """
    w = SeedWavelet(seed)
    quad = QuadratureConfig() if quad is None else quad
    scale = max(abs(v) for v in seed.values)
    checks = {}
    report = {"seed": seed.to_dict(), "n": seed.n, "centered": seed.centered}

    checks["admissible"] = _check(
        seed.admissible, sum=math.fsum(seed.values), tolerance=seed.admissible_tolerance
    )
    try:
        value, err = admissibility_constant(w, quad, return_error=True)
        ok = math.isfinite(value) and value > 0 and err <= ADMISSIBILITY_REL_ERR * value
        checks["admissibility_constant"] = _check(ok, value=value, error_estimate=err)
    except (AdmissibilityError, DegenerateInputError, ConvergenceError) as exc:
        checks["admissibility_constant"] = _check(False, error=str(exc))

    dev = interpolation_error(w)
    checks["interpolation"] = _check(
        dev <= INTERPOLATION_REL_TOL * scale, max_deviation=dev, tolerance=INTERPOLATION_REL_TOL * scale
    )

    analytic = energy(w)
    try:
        quad_value, quad_err = energy_by_quadrature(w, cfg=quad)
        rel = abs(quad_value - analytic) / analytic if analytic > 0 else abs(quad_value)
        checks["energy"] = _check(
            rel <= ENERGY_REL_TOL,
            analytic=analytic,
            quadrature=quad_value,
            quadrature_error=quad_err,
            relative_difference=rel,
            tolerance=ENERGY_REL_TOL,
        )
    except ConvergenceError as exc:
        checks["energy"] = _check(False, analytic=analytic, error=str(exc))

    if seed.centered and any(seed.values):
        moments = vanishing_order(seed, tol=tol, max_order=max_order)
        report["moments"] = moments.to_dict()
        if min_order is not None:
            checks["vanishing_order"] = _check(
                moments.vanishing_order >= min_order, detected=moments.vanishing_order, required=min_order
            )
    else:
        report["moments"] = None
        if min_order is not None:
            reason = "seed is not centered" if any(seed.values) else "zero seed"
            checks["vanishing_order"] = _check(False, reason=reason, required=min_order)

    report["checks"] = checks
    report["passed"] = all(c["status"] != "fail" for c in checks.values())
    return report
