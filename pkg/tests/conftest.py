import os
import tempfile
from pathlib import Path

import pytest

ACCEPTANCE_LINES = []


def pytest_configure(config):
    # share one corpus cache across runs without touching the user cache
    if "CHIBOUND_CACHE_DIR" not in os.environ:
        cache = Path(tempfile.gettempdir()) / "chibound-test-cache"
        os.environ["CHIBOUND_CACHE_DIR"] = str(cache)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def small_connected():
    from chibound import corpus

    return corpus.connected_corpus(6)
