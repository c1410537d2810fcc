import sys
from pathlib import Path

import pytest

from crosscode.store import load_index_dir

REPO = Path(__file__).resolve().parents[1]
FIXTURES = REPO / "fixtures"


@pytest.fixture(scope="session")
def repo_root() -> Path:
    return REPO


@pytest.fixture(scope="session")
def runner_cmd() -> list[str]:
    """Command line that launches the bundled Python snippet runner."""
    return [sys.executable, str(REPO / "runner_py" / "src" / "runner_py" / "server.py")]


@pytest.fixture(scope="session")
def fig1_bundle():
    """Four-snippet index with hand-authored behavior profiles."""
    return load_index_dir(FIXTURES / "fig1" / "table1_index")


@pytest.fixture(scope="session")
def fig1_replay_bundle():
    """The same four snippets, profiled from recorded executions."""
    return load_index_dir(FIXTURES / "fig1" / "replay_index")


@pytest.fixture(scope="session")
def groups_bundle():
    """120 snippets in 20 behavior groups, two languages, three variants."""
    return load_index_dir(FIXTURES / "groups20" / "index")
