import time

import numpy as np
import pytest

from liecycles.config import TOL

_START = time.perf_counter()


def pytest_configure(config):
    config._acceptance = {}


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(autouse=True)
def _fresh_tolerances():
    saved = (TOL.tau_class, TOL.tau_rank, TOL.tau_proper)
    yield
    TOL.tau_class, TOL.tau_rank, TOL.tau_proper = saved


@pytest.fixture
def acceptance(request):
    """Record (criterion, passed, detail) for the closing summary."""
    log = request.config._acceptance

    def record(name, passed, detail):
        log[name] = (bool(passed), detail)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    log = getattr(config, "_acceptance", {})
    if not log:
        return
    elapsed = time.perf_counter() - _START
    tr = terminalreporter
    tr.section("acceptance criteria")
    for name, (passed, detail) in log.items():
        if name.startswith("CLI"):
            passed = passed and elapsed < 60.0
            detail = f"{detail}; suite wall time {elapsed:.1f}s (< 60s required)"
        tr.write_line(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
