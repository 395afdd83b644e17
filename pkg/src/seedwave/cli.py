"""Command-line interface.

Subcommands::

    seedwave gen        seed JSON or --random -> seed, psi CSV, spectrum CSV
    seedwave verify     seed JSON -> moment/admissibility/energy report
    seedwave construct  n p variance rng_seed -> symmetric seed with p vanishing moments
    seedwave decompose  seed JSON -> even and odd parts
    seedwave cwt        signal CSV + seed JSON -> coefficient grid CSV

Every command that writes files also writes ``manifest.json`` listing its
parameters and the SHA-256 of each output. Exit codes: 0 success,
1 validation or numerical failure, 2 I/O or parse error.
"""
import argparse
import json
import logging
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .checks import verify_seed
from .construct import build_symmetric_wavelet
from .exceptions import AdmissibilityError, FileFormatError, SeedwaveError, ValidationError
from .io import (
    atomic_write_text,
    cwt_csv,
    dumps_json,
    grid_csv,
    read_seed,
    read_signal_csv,
    spectrum_csv,
    write_json,
    write_manifest,
    write_seed,
)
from .seedseq import SeedSequence, decompose_even_odd, random_seed
from .transform import cwt
from .wavelet import SeedWavelet, evaluate_grid, spectrum

log = logging.getLogger("seedwave")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_IO = 2


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_IO, f"{self.prog}: error: {message}\n")


def _default_grid(seed):
    pad = 2.0 * max(seed.span, 2.0 * seed.delta)
    return seed.t0 - pad, seed.t0 + seed.span + pad


def _grid_args(seed, grid, points):
    if grid is not None:
        start, end, count = grid
        return float(start), float(end), int(count)
    start, end = _default_grid(seed)
    return start, end, points


def _write_psi(path, seed, start, end, count):
    return atomic_write_text(path, grid_csv(evaluate_grid(SeedWavelet(seed), start, end, count)))


def _parse_floats(text, name):
    """Comma list ``1,2,4`` or ``start:stop:count`` (inclusive linspace)."""
    try:
        if ":" in text:
            start, stop, count = text.split(":")
            return np.linspace(float(start), float(stop), int(count))
        return np.array([float(v) for v in text.split(",") if v.strip()])
    except ValueError as exc:
        raise ValidationError(f"cannot parse {name} {text!r}: use a,b,c or start:stop:count") from exc


# --- subcommands -----------------------------------------------------------


def cmd_gen(args):
    if args.random is not None:
        try:
            n, variance, rng_seed = int(args.random[0]), float(args.random[1]), int(args.random[2])
        except ValueError as exc:
            raise ValidationError(f"--random expects integer N, real VARIANCE, integer RNG_SEED: {exc}") from exc
        seed = random_seed(n, variance, rng_seed, delta=args.delta)
        params = {"random": {"n": n, "variance": variance, "rng_seed": rng_seed}}
    elif args.seed is not None:
        seed = read_seed(args.seed)
        params = {"seed": seed.to_dict()}
        if args.delta is not None:
            seed = SeedSequence(seed.values, args.delta, seed.t0)
    else:
        raise ValidationError("gen needs a seed file or --random N VARIANCE RNG_SEED")
    if args.t0 is not None:
        seed = SeedSequence(seed.values, seed.delta, args.t0)
    if not seed.admissible and not args.allow_nonadmissible:
        raise AdmissibilityError(
            f"seed values sum to {math.fsum(seed.values)!r}, so the wavelet is not admissible "
            "(pass --allow-nonadmissible to write it anyway)"
        )

    out = Path(args.out)
    start, end, count = _grid_args(seed, args.grid, args.points)
    w = SeedWavelet(seed)
    omega = np.linspace(-1.5 * w.band_edge, 1.5 * w.band_edge, args.spectrum_points)
    outputs = [
        write_seed(out / "seed.json", seed),
        _write_psi(out / "psi.csv", seed, start, end, count),
        atomic_write_text(out / "spectrum.csv", spectrum_csv(omega, spectrum(w, omega))),
    ]
    params.update(
        delta=seed.delta,
        t0=seed.t0,
        grid=[start, end, count],
        spectrum_points=args.spectrum_points,
        allow_nonadmissible=args.allow_nonadmissible,
    )
    write_manifest(out, "gen", params, outputs, __version__)
    return EXIT_OK


def cmd_verify(args):
    seed = read_seed(args.seed)
    report = verify_seed(seed, max_order=args.max_order, min_order=args.min_order, tol=args.tol)
    text = dumps_json(report)
    if args.out is not None:
        out = Path(args.out)
        path = atomic_write_text(out / "report.json", text)
        params = {"seed": seed.to_dict(), "max_order": args.max_order, "min_order": args.min_order, "tol": args.tol}
        write_manifest(out, "verify", params, [path], __version__)
    sys.stdout.write(text)
    for name, check in report["checks"].items():
        log.info("%s: %s", name, check["status"])
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_construct(args):
    seed, system = build_symmetric_wavelet(
        args.n, args.p, args.variance, args.rng_seed, delta=args.delta, t0=args.t0
    )
    out = Path(args.out)
    start, end, count = _grid_args(seed, args.grid, args.points)
    outputs = [
        write_seed(out / "seed.json", seed),
        write_json(out / "system.json", system.to_dict()),
        _write_psi(out / "psi.csv", seed, start, end, count),
    ]
    params = {
        "n": args.n,
        "p": args.p,
        "variance": args.variance,
        "rng_seed": args.rng_seed,
        "delta": seed.delta,
        "t0": seed.t0,
        "grid": [start, end, count],
    }
    write_manifest(out, "construct", params, outputs, __version__)
    return EXIT_OK


def cmd_decompose(args):
    seed = read_seed(args.seed)
    even, odd = decompose_even_odd(seed)
    out = Path(args.out)
    start, end, count = _grid_args(seed, args.grid, args.points)
    outputs = [
        write_seed(out / "even.json", even),
        write_seed(out / "odd.json", odd),
        _write_psi(out / "even.csv", even, start, end, count),
        _write_psi(out / "odd.csv", odd, start, end, count),
    ]
    params = {"seed": seed.to_dict(), "grid": [start, end, count]}
    write_manifest(out, "decompose", params, outputs, __version__)
    return EXIT_OK


def cmd_cwt(args):
    signal, signal_delta, t0 = read_signal_csv(args.signal)
    seed = read_seed(args.seed)
    if not seed.admissible and not args.allow_nonadmissible:
        raise AdmissibilityError("analyzing seed does not sum to zero (pass --allow-nonadmissible to proceed)")
    scales = _parse_floats(args.scales, "scales")
    if args.shifts is None:
        shifts = t0 + np.arange(signal.size) * signal_delta
    else:
        shifts = _parse_floats(args.shifts, "shifts")
    grid = cwt(signal, signal_delta, SeedWavelet(seed), scales, shifts, t0=t0)
    out = Path(args.out)
    path = atomic_write_text(out / "cwt.csv", cwt_csv(grid))
    params = {
        "signal": {"n": int(signal.size), "signal_delta": signal_delta, "t0": t0},
        "seed": seed.to_dict(),
        "scales": args.scales,
        "shifts": args.shifts,
    }
    write_manifest(out, "cwt", params, [path], __version__)
    return EXIT_OK


# --- parser ----------------------------------------------------------------


def _add_grid_options(p):
    p.add_argument("--grid", nargs=3, type=float, metavar=("START", "END", "COUNT"), help="sampling grid for psi CSV")
    p.add_argument("--points", type=int, default=1001, help="grid points when --grid is not given (default 1001)")


def build_parser():
    parser = _ArgumentParser(prog="seedwave", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("gen", help="sample a seed wavelet and its spectrum")
    p.add_argument("seed", nargs="?", help="seed JSON file")
    p.add_argument("--random", nargs=3, metavar=("N", "VARIANCE", "RNG_SEED"), help="draw a zero-mean Gaussian seed")
    p.add_argument("--delta", type=float, help="sampling period (overrides the seed's)")
    p.add_argument("--t0", type=float, help="time of the first sample (overrides the seed's)")
    p.add_argument("--spectrum-points", type=int, default=801)
    p.add_argument("--allow-nonadmissible", action="store_true")
    p.add_argument("--out", required=True, help="output directory")
    _add_grid_options(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check admissibility, interpolation, energy and moments")
    p.add_argument("seed", help="seed JSON file")
    p.add_argument("--max-order", type=int, help="list moments up to this order")
    p.add_argument("--min-order", type=int, help="fail unless at least this many moments vanish")
    p.add_argument("--tol", type=float, default=1e-9, help="relative zero test for moments")
    p.add_argument("--out", help="directory for report.json and manifest.json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build a symmetric random seed with p vanishing moments")
    p.add_argument("n", type=int, help="seed length (odd)")
    p.add_argument("p", type=int, help="vanishing-moment order (odd, < n)")
    p.add_argument("variance", type=float, help="variance of the random wing")
    p.add_argument("rng_seed", type=int)
    p.add_argument("--delta", type=float, help="sampling period (default: span [-1, 1])")
    p.add_argument("--t0", type=float, help="time of the first sample (default: centered)")
    p.add_argument("--out", required=True)
    _add_grid_options(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("decompose", help="split a centered seed into even and odd parts")
    p.add_argument("seed")
    p.add_argument("--out", required=True)
    _add_grid_options(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("cwt", help="continuous wavelet transform of a sampled signal")
    p.add_argument("signal", help="CSV with header t,x and uniformly spaced t")
    p.add_argument("seed", help="seed JSON of the analyzing wavelet")
    p.add_argument("--scales", required=True, help="a,b,c or start:stop:count")
    p.add_argument("--shifts", help="a,b,c or start:stop:count (default: the signal's sample times)")
    p.add_argument("--allow-nonadmissible", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_cwt)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (OSError, FileFormatError, json.JSONDecodeError, UnicodeDecodeError) as exc:
        print(f"seedwave {args.command}: {exc}", file=sys.stderr)
        return EXIT_IO
    except SeedwaveError as exc:
        print(f"seedwave {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
