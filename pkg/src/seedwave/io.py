"""JSON and CSV serialization.

Floats are written with ``repr`` (shortest round-trip form), so reading a
file back reproduces every value bit for bit. All writes go through a
temporary file in the target directory followed by an atomic rename.
"""
import csv
import hashlib
import io
import json
import os
import tempfile
from pathlib import Path

import numpy as np

from .exceptions import FileFormatError, ValidationError
from .seedseq import SeedSequence

__all__ = [
    "atomic_write_text",
    "dumps_json",
    "write_json",
    "read_json",
    "read_seed",
    "write_seed",
    "format_float",
    "grid_csv",
    "spectrum_csv",
    "cwt_csv",
    "read_signal_csv",
    "read_grid_csv",
    "read_cwt_csv",
    "write_manifest",
]


def format_float(x):
    return repr(float(x))


def atomic_write_text(path, text):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def dumps_json(data):
    # json uses float.__repr__, which is already shortest round-trip
    return json.dumps(data, indent=2, sort_keys=False, allow_nan=False) + "\n"


def write_json(path, data):
    return atomic_write_text(path, dumps_json(data))


def read_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def read_seed(path):
    data = read_json(path)
    if not isinstance(data, dict):
        raise FileFormatError(f"{path}: seed file must hold a JSON object")
    return SeedSequence.from_dict(data)


def write_seed(path, seed):
    return write_json(path, seed.to_dict())


def _csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_float(v) for v in row])
    return buf.getvalue()


def grid_csv(grid):
    """CSV text for an ``(N, 2)`` array of ``(t, psi)`` rows."""
    return _csv_text(["t", "psi"], np.asarray(grid))


def spectrum_csv(omega, values):
    values = np.asarray(values, dtype=complex)
    rows = np.column_stack([np.asarray(omega, dtype=float), values.real, values.imag, np.abs(values)])
    return _csv_text(["omega", "re", "im", "abs"], rows)


def cwt_csv(grid):
    """Header row of shifts, then one row per scale: scale, coefficients..."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["scale"] + [format_float(b) for b in grid.shifts])
    for a, row in zip(grid.scales, grid.coefficients):
        writer.writerow([format_float(a)] + [format_float(v) for v in row])
    return buf.getvalue()


def read_cwt_csv(path):
    with open(path, encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    try:
        shifts = np.array([float(v) for v in rows[0][1:]])
        scales = np.array([float(r[0]) for r in rows[1:]])
        coef = np.array([[float(v) for v in r[1:]] for r in rows[1:]])
    except (ValueError, IndexError) as exc:
        raise FileFormatError(f"{path}: malformed CWT grid CSV") from exc
    return scales, shifts, coef


def read_grid_csv(path):
    """Read a headed all-numeric CSV; returns ``(header, rows)``."""
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
            rows = [[float(v) for v in r] for r in reader if r]
        except StopIteration as exc:
            raise FileFormatError(f"{path}: empty CSV file") from exc
        except ValueError as exc:
            raise FileFormatError(f"{path}, line {reader.line_num}: {exc}") from exc
    return header, np.array(rows)


def read_signal_csv(path, uniform_rtol=1e-6):
    """Read a ``t,x`` CSV with uniformly spaced times.

    Returns ``(values, signal_delta, t0)``.
    """
    header, rows = read_grid_csv(path)
    if rows.ndim != 2 or rows.shape[1] != 2 or rows.shape[0] < 2:
        raise ValidationError(f"{path}: expected a two-column t,x CSV with at least 2 rows")
    t = rows[:, 0]
    steps = np.diff(t)
    delta = (t[-1] - t[0]) / (len(t) - 1)
    if delta <= 0 or not np.allclose(steps, delta, rtol=uniform_rtol, atol=0.0):
        raise ValidationError(f"{path}: sample times must be increasing and uniformly spaced")
    return rows[:, 1], float(delta), float(t[0])


def sha256_file(path):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def write_manifest(out_dir, command, params, outputs, version):
    """Record a command run; output paths are stored relative to `out_dir`."""
    out_dir = Path(out_dir)
    manifest = {
        "command": command,
        "version": version,
        "parameters": params,
        "outputs": [{"path": Path(p).name, "sha256": sha256_file(p)} for p in outputs],
    }
    return write_json(out_dir / "manifest.json", manifest)
