import numpy as np
import pytest


def theta_from_entanglement(e: float, chi: float) -> float:
    """Principal-branch inverse of E(theta, chi), theta in [0, pi/2]."""
    ratio = (4 * e * (1 - e)) ** 0.25 / abs(np.sin(chi)) ** 0.5
    return float(np.arcsin(min(ratio, 1.0)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.report_lines():
        terminalreporter.write_line(line)
