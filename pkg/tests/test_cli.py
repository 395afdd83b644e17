import json

import numpy as np
import pytest

from seedwave import SeedWavelet, evaluate, new_seed, random_seed
from seedwave.cli import main
from seedwave.io import read_grid_csv, read_seed, write_seed


def run(args, capsys=None):
    code = main([str(a) for a in args])
    out = capsys.readouterr() if capsys is not None else None
    return code, out


@pytest.fixture
def example1_file(tmp_path):
    return write_seed(tmp_path / "ex1.json", new_seed([1, -1], 0.5, 0.25))


def test_gen_example1_peaks(tmp_path, example1_file):
    out = tmp_path / "gen"
    code, _ = run(["gen", example1_file, "--grid", -1, 2, 3001, "--out", out])
    assert code == 0
    header, rows = read_grid_csv(out / "psi.csv")
    assert header == ["t", "psi"]
    # sample values are exactly +-1; the continuous extrema sit just outside
    # the samples (t ~ 0.158, 0.842) at +-1.0921
    assert rows[:, 1].max() == pytest.approx(1.0921267639990335, abs=1e-5)
    assert rows[:, 1].min() == pytest.approx(-1.0921267639990335, abs=1e-5)
    at_samples = rows[np.isin(rows[:, 0], [0.25, 0.75]), 1]
    np.testing.assert_allclose(at_samples, [1.0, -1.0], atol=1e-12)
    assert {p.name for p in out.iterdir()} == {"seed.json", "psi.csv", "spectrum.csv", "manifest.json"}
    header, spec = read_grid_csv(out / "spectrum.csv")
    assert header == ["omega", "re", "im", "abs"]
    assert np.all(spec[np.abs(spec[:, 0]) > 2 * np.pi, 3] == 0)


def test_gen_random_is_reproducible(tmp_path):
    for d in ("a", "b"):
        assert run(["gen", "--random", 41, 1.0, 7, "--out", tmp_path / d])[0] == 0
    for name in ("seed.json", "psi.csv", "spectrum.csv", "manifest.json"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
    assert read_seed(tmp_path / "a" / "seed.json") == random_seed(41, 1.0, 7)


def test_gen_rejects_nonadmissible(tmp_path, capsys):
    seed = write_seed(tmp_path / "bad.json", new_seed([1, 2], 1.0))
    code, out = run(["gen", seed, "--out", tmp_path / "o"], capsys)
    assert code == 1
    assert "admissible" in out.err
    assert run(["gen", seed, "--allow-nonadmissible", "--out", tmp_path / "o"])[0] == 0


def test_gen_overrides(tmp_path, example1_file):
    run(["gen", example1_file, "--delta", 0.25, "--t0", 0.0, "--out", tmp_path / "o"])
    s = read_seed(tmp_path / "o" / "seed.json")
    assert (s.delta, s.t0) == (0.25, 0.0)


def test_gen_needs_a_source(tmp_path):
    assert run(["gen", "--out", tmp_path])[0] == 1


def test_verify_second_difference(tmp_path, capsys):
    seed = write_seed(tmp_path / "s.json", new_seed([1, -2, 1], 1.0, -1.0))
    code, out = run(["verify", seed, "--out", tmp_path / "v"], capsys)
    assert code == 0
    report = json.loads(out.out)
    assert report["moments"]["vanishing_order"] == 2
    assert report["checks"]["energy"]["analytic"] == 6.0
    assert json.loads((tmp_path / "v" / "report.json").read_text()) == report


def test_verify_nonadmissible_fails(tmp_path, capsys):
    seed = write_seed(tmp_path / "s.json", new_seed([1, 2], 1.0))
    code, out = run(["verify", seed], capsys)
    assert code == 1
    report = json.loads(out.out)
    assert report["checks"]["admissible"]["status"] == "fail"
    assert report["checks"]["admissibility_constant"]["status"] == "fail"


def test_verify_min_order(tmp_path, capsys):
    seed = write_seed(tmp_path / "s.json", new_seed([1, -2, 1], 1.0, -1.0))
    assert run(["verify", seed, "--min-order", 2], capsys)[0] == 0
    assert run(["verify", seed, "--min-order", 3], capsys)[0] == 1


def test_verify_max_order_lists_moments(tmp_path, capsys):
    seed = write_seed(tmp_path / "s.json", new_seed([1, -2, 1], 1.0, -1.0))
    _, out = run(["verify", seed, "--max-order", 6], capsys)
    assert len(json.loads(out.out)["moments"]["moments"]) == 7


def test_construct_example4(tmp_path, capsys):
    out = tmp_path / "c"
    assert run(["construct", 15, 3, 1, 7, "--out", out])[0] == 0
    assert {p.name for p in out.iterdir()} == {"seed.json", "system.json", "psi.csv", "manifest.json"}
    code, res = run(["verify", out / "seed.json", "--min-order", 3], capsys)
    assert code == 0
    assert json.loads(res.out)["moments"]["vanishing_order"] >= 3
    system = json.loads((out / "system.json").read_text())
    assert system["nodes"] == [-1, 0, 1] and len(system["wing"]) == 6


@pytest.mark.parametrize("n, p, msg", [(15, 4, "p must be odd"), (15, 17, "p < n"), (14, 3, "n must be odd")])
def test_construct_rejects(tmp_path, capsys, n, p, msg):
    code, out = run(["construct", n, p, 1, 7, "--out", tmp_path / "c"], capsys)
    assert code == 1
    assert msg in out.err


def test_decompose(tmp_path):
    seed = write_seed(tmp_path / "s.json", new_seed([3, 1, -2, -1, -1], 1.0, -2.0))
    out = tmp_path / "d"
    assert run(["decompose", seed, "--grid", -4, 4, 81, "--out", out])[0] == 0
    assert read_seed(out / "even.json").values == (1, 0, -2, 0, 1)
    assert read_seed(out / "odd.json").values == (2, 1, 0, -1, -2)
    _, even = read_grid_csv(out / "even.csv")
    _, odd = read_grid_csv(out / "odd.csv")
    np.testing.assert_allclose(even[:, 1], even[::-1, 1], atol=1e-12)
    np.testing.assert_allclose(odd[:, 1], -odd[::-1, 1], atol=1e-12)


def test_decompose_rejects_uncentered(tmp_path, example1_file):
    assert run(["decompose", example1_file, "--out", tmp_path / "d"])[0] == 1


def _write_signal(path, t, x):
    path.write_text("t,x\n" + "".join(f"{float(a)!r},{float(b)!r}\n" for a, b in zip(t, x)))
    return path


def test_cwt_command(tmp_path):
    seed_obj = random_seed(9, 1.0, 3, delta=0.1)
    seed = write_seed(tmp_path / "s.json", seed_obj)
    t = np.arange(100) * 0.05
    sig = _write_signal(tmp_path / "sig.csv", t, np.cos(3 * t))
    out = tmp_path / "w"
    assert run(["cwt", sig, seed, "--scales", "0.5,1,2", "--shifts", "0:4:9", "--out", out])[0] == 0
    lines = (out / "cwt.csv").read_text().splitlines()
    assert lines[0].split(",")[0] == "scale"
    assert len(lines) == 4 and len(lines[1].split(",")) == 10
    # spot-check one coefficient against the library
    w = SeedWavelet(seed_obj)
    ref = 0.05 * np.sum(np.cos(3 * t) * evaluate(w, (t - 2.0) / 2.0)) / np.sqrt(2.0)
    assert float(lines[3].split(",")[5]) == pytest.approx(ref, rel=1e-12)


def test_cwt_command_zero_signal(tmp_path):
    seed = write_seed(tmp_path / "s.json", random_seed(5, 1.0, 0))
    sig = _write_signal(tmp_path / "sig.csv", np.arange(10) * 0.1, np.zeros(10))
    run(["cwt", sig, seed, "--scales", "1", "--out", tmp_path / "w"])
    rows = (tmp_path / "w" / "cwt.csv").read_text().splitlines()[1:]
    assert all(float(v) == 0.0 for v in rows[0].split(",")[1:])


def test_cwt_bad_scales(tmp_path, capsys):
    seed = write_seed(tmp_path / "s.json", random_seed(5, 1.0, 0))
    sig = _write_signal(tmp_path / "sig.csv", np.arange(10) * 0.1, np.ones(10))
    assert run(["cwt", sig, seed, "--scales", "1,-2", "--out", tmp_path / "w"], capsys)[0] == 1
    assert run(["cwt", sig, seed, "--scales", "abc", "--out", tmp_path / "w"], capsys)[0] == 1


def test_io_errors_exit_2(tmp_path, capsys):
    assert run(["verify", tmp_path / "missing.json"], capsys)[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["verify", bad], capsys)[0] == 2
    seed = write_seed(tmp_path / "s.json", random_seed(5, 1.0, 0))
    sig = tmp_path / "sig.csv"
    sig.write_text("t,x\n0,1\n0.1,oops\n")
    assert run(["cwt", sig, seed, "--scales", "1", "--out", tmp_path / "w"], capsys)[0] == 2


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["construct", "15"])
    assert info.value.code == 2


def test_construct_verify_fuzz(tmp_path, capsys):
    rng = np.random.default_rng(5)
    for i in range(50):
        n = int(rng.choice([5, 7, 9, 11, 15, 21, 31, 41]))
        p = int(rng.choice([q for q in (1, 3, 5, 7) if q < n]))
        variance = float(rng.uniform(0.1, 3.0))
        out = tmp_path / f"r{i}"
        assert run(["construct", n, p, variance, int(rng.integers(0, 2**31)), "--points", 11, "--out", out])[0] == 0
        code, res = run(["verify", out / "seed.json", "--min-order", p], capsys)
        assert code == 0, res.out
