import numpy as np
import pytest

from seedwave import SeedWavelet, new_seed

_ACCEPTANCE = []


@pytest.fixture
def example1():
    """Two-sample seed from a Haar wavelet sampled at t = 1/4, 3/4."""
    return SeedWavelet(new_seed([1.0, -1.0], 0.5, 0.25))


@pytest.fixture
def second_difference():
    return new_seed([1.0, -2.0, 1.0], 1.0, -1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def centered_seed(values, delta=1.0):
    values = list(values)
    return new_seed(values, delta, -((len(values) - 1) // 2) * delta)


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in _ACCEPTANCE:
        terminalreporter.write_line(line)
