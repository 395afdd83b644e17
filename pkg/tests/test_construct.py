import warnings

import numpy as np
import pytest

from seedwave import (
    ConstructionSystem,
    DegenerateInputError,
    ParityError,
    SeedWavelet,
    SingularMatrixError,
    ValidationError,
    analytic_moment,
    assemble_system,
    build_symmetric_wavelet,
    evaluate,
    moment_matrix,
    solve_dense,
    vanishing_order,
)
from seedwave.construct import ConditioningWarning

VALID_NP = [(n, p) for n in (9, 15, 21, 41) for p in (1, 3, 5, 7) if p < n and (n - p) % 2 == 0]


def test_example4_layout():
    sys_ = assemble_system(np.arange(1.0, 7.0), 15, 3)
    assert len(sys_.wing) == 6
    assert sys_.nodes == (-1, 0, 1)
    np.testing.assert_array_equal(sys_.M, [[1, 1, 1], [-1, 0, 1], [1, 0, 1]])
    assert sys_.c[1] == 0.0
    assert not sys_.solved


def test_constant_vector_by_hand():
    # n=7, p=3: l=3, wing at -3, -2 with values 1, 2
    sys_ = assemble_system([1.0, 2.0], 7, 3)
    np.testing.assert_array_equal(sys_.c, [-2 * (1 + 2), 0.0, -2 * (9 * 1 + 4 * 2)])


def test_zero_wing_gives_zero_constants():
    sys_ = assemble_system(np.zeros(4), 15, 7)
    assert np.all(sys_.c == 0)


@pytest.mark.parametrize("p", [1, 3, 5])
def test_odd_constants_always_zero(rng, p):
    sys_ = assemble_system(rng.standard_normal((15 - p) // 2), 15, p)
    assert np.all(sys_.c[1::2] == 0)


def test_nodes_are_middle_of_full_matrix():
    sys_ = assemble_system(np.ones(3), 11, 5)
    full = moment_matrix(5, 5)
    np.testing.assert_array_equal(sys_.M, full[:, 3:8])


@pytest.mark.parametrize(
    "wing, n, p, exc",
    [
        (np.ones(6), 14, 3, ParityError),
        (np.ones(5), 15, 4, ParityError),
        (np.ones(0), 15, 15, ValidationError),
        (np.ones(0), 15, 17, ValidationError),
        (np.ones(5), 15, 3, ValidationError),
        (np.ones(6), 15, 0, ValidationError),
    ],
)
def test_assemble_rejects(wing, n, p, exc):
    with pytest.raises(exc):
        assemble_system(wing, n, p)


def test_solve_identity(rng):
    c = rng.standard_normal(5)
    np.testing.assert_array_equal(solve_dense(np.eye(5), c), c)


def test_solve_hand_example():
    np.testing.assert_allclose(solve_dense([[1, 1, 1], [-1, 0, 1], [1, 0, 1]], [4, 0, 2]), [1, 2, 1], atol=1e-15)


def test_solve_needs_pivoting():
    x = solve_dense([[0.0, 1.0], [1.0, 0.0]], [2.0, 3.0])
    np.testing.assert_array_equal(x, [3.0, 2.0])


def test_solve_residual_bound(rng):
    for _ in range(50):
        k = int(rng.integers(1, 10))
        M = rng.standard_normal((k, k))
        c = rng.standard_normal(k)
        x = solve_dense(M, c)
        bound = 1e-10 * (np.abs(M).sum(axis=1).max() * np.abs(x).max() + np.abs(c).max())
        assert np.abs(M @ x - c).max() <= bound


@pytest.mark.parametrize("M", [[[1, 2], [2, 4]], [[1, 1, 1], [1, 1, 1], [0, 1, 2]], [[0, 0], [1, 1]]])
def test_solve_singular(M):
    with pytest.raises(SingularMatrixError):
        solve_dense(M, np.ones(len(M)))


def test_solve_shape_checks():
    with pytest.raises(ValidationError):
        solve_dense(np.ones((2, 3)), np.ones(2))
    with pytest.raises(ValidationError):
        solve_dense(np.eye(2), np.ones(3))


def test_example4_order():
    for k in range(10):
        seed, sys_ = build_symmetric_wavelet(15, 3, 1.0, k)
        r = vanishing_order(seed)
        assert r.vanishing_order >= 3
        # odd moments vanish by mirror symmetry, so order 3 comes for free
        assert abs(analytic_moment(seed, 3)) <= 1e-12 * seed.delta**4
        assert r.vanishing_order >= 4


def test_default_time_span():
    seed, _ = build_symmetric_wavelet(41, 3, 1.0, 0)
    assert seed.delta == pytest.approx(0.05)
    assert seed.times[0] == pytest.approx(-1.0) and seed.times[-1] == pytest.approx(1.0)
    assert seed.centered
    seed, _ = build_symmetric_wavelet(15, 3, 1.0, 0, delta=0.05)
    assert seed.delta == 0.05 and seed.centered


@pytest.mark.parametrize("n, p", VALID_NP)
def test_moment_annihilation(n, p):
    l = (n - 1) // 2
    k = np.arange(-l, l + 1).astype(float)
    for trial in range(20):
        seed, sys_ = build_symmetric_wavelet(n, p, 1.0, 1000 * n + 10 * p + trial)
        u = np.array(seed.values)
        ref = np.sum(np.abs(k ** (p - 1) * u))
        for m in range(p):
            assert abs(np.sum(k**m * u)) <= 1e-9 * ref
        x = sys_.x
        assert np.max(np.abs(x - x[::-1])) <= 1e-10 * np.max(np.abs(x))
        np.testing.assert_array_equal(u[: len(sys_.wing)], sys_.wing)
        np.testing.assert_array_equal(u, u[::-1])


def test_wing_preserved_bit_for_bit():
    wing = [0.1, -0.7, 1e-17, 3.3]
    seed, _ = build_symmetric_wavelet(11, 3, 1.0, 0, wing=wing)
    assert seed.values[:4] == tuple(wing)
    assert seed.values[-4:] == tuple(wing[::-1])


def test_symmetric_seed_gives_even_wavelet():
    seed, _ = build_symmetric_wavelet(21, 5, 1.0, 3)
    w = SeedWavelet(seed)
    t = np.linspace(0.0, 3.0, 1001)
    scale = np.max(np.abs(seed.values))
    np.testing.assert_allclose(evaluate(w, t), evaluate(w, -t), rtol=0, atol=1e-12 * scale)


def test_determinism():
    a = build_symmetric_wavelet(21, 5, 0.6, 99)
    b = build_symmetric_wavelet(21, 5, 0.6, 99)
    assert a[0] == b[0]
    np.testing.assert_array_equal(a[1].x, b[1].x)
    assert build_symmetric_wavelet(21, 5, 0.6, 100)[0] != a[0]


def test_variance_scales_wing():
    small, _ = build_symmetric_wavelet(41, 1, 0.25, 5)
    big, _ = build_symmetric_wavelet(41, 1, 1.0, 5)
    np.testing.assert_allclose(np.array(big.values), 2 * np.array(small.values), rtol=1e-15)


def test_zero_wing_gives_degenerate_seed():
    seed, sys_ = build_symmetric_wavelet(15, 3, 1.0, 0, wing=np.zeros(6))
    assert np.all(sys_.x == 0)
    with pytest.raises(DegenerateInputError):
        vanishing_order(seed)


def test_matrix_does_not_depend_on_wing(rng):
    a = assemble_system(rng.standard_normal(4), 13, 5)
    b = assemble_system(rng.standard_normal(4), 13, 5)
    np.testing.assert_array_equal(a.M, b.M)
    assert np.isfinite(np.linalg.cond(a.M))


@pytest.mark.parametrize("args", [(15, 4), (15, 17), (15, 15), (14, 3), (15, 0)])
def test_build_rejects(args):
    with pytest.raises(ValidationError):
        build_symmetric_wavelet(*args, 1.0, 0)


def test_build_rejects_bad_variance():
    with pytest.raises(ValidationError):
        build_symmetric_wavelet(15, 3, 0.0, 0)


def test_parity_message_names_the_constraint():
    with pytest.raises(ParityError, match="p must be odd"):
        build_symmetric_wavelet(15, 4, 1.0, 0)


def test_conditioning_warning_for_high_order():
    with pytest.warns(ConditioningWarning):
        build_symmetric_wavelet(41, 15, 1.0, 0)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        build_symmetric_wavelet(41, 7, 1.0, 0)


def test_system_json_round_trip():
    _, sys_ = build_symmetric_wavelet(15, 3, 1.0, 4)
    back = ConstructionSystem.from_dict(sys_.to_dict())
    np.testing.assert_array_equal(back.M, sys_.M)
    np.testing.assert_array_equal(back.x, sys_.x)
    assert back.nodes == sys_.nodes and back.wing == sys_.wing and back.p == 3
