import numpy as np
import pytest

from harmconv.certify import SweepGrid


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def coarse_grid():
    return SweepGrid.uniform(0.9, n_radii=15, angles=96)


def random_series_coeffs(rng, order, decay=0.9):
    k = np.arange(order)
    c = (rng.standard_normal(order) + 1j * rng.standard_normal(order)) * decay**k
    return c


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
