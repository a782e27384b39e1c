from __future__ import annotations

import pytest

from arrspec import prepare, run_checks, spectrum_from_setup
from arrspec.fixtures import resolve_fixture

FIXTURE_NAMES = [
    "example-a",
    "example-a-weighted",
    "example-b1",
    "example-b2",
    "generic3d:4",
    "generic3d:5",
    "generic3d:6",
]


@pytest.fixture(scope="session")
def setups():
    """Prepared pipelines for the standard fixtures, shared across tests."""
    return {name: prepare(resolve_fixture(name)) for name in FIXTURE_NAMES}


@pytest.fixture(scope="session")
def results(setups):
    return {name: spectrum_from_setup(s) for name, s in setups.items()}


@pytest.fixture(scope="session")
def check_reports(setups, results):
    return {name: run_checks(setups[name], results[name]) for name in FIXTURE_NAMES}
