from __future__ import annotations

import pytest

ACCEPTANCE_LOG: dict[str, tuple[str, str, float]] = {}


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow checks (d = 7 graph census)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LOG


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LOG, key=lambda k: (int(k.split()[0]), k)):
        status, title, elapsed = ACCEPTANCE_LOG[n]
        terminalreporter.write_line(f"[{status}] criterion {n}: {title} ({elapsed:.2f}s)")
