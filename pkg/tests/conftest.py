from __future__ import annotations

import pytest

from elicitor import fixture_path, load_default_dataset


def pytest_runtest_logreport(report):
    if (report.when == "call" and report.failed
            and "test_acceptance" in report.nodeid):
        print(f"FAIL: {report.nodeid.split('::')[-1]}")
from elicitor.profiles import load_profile


@pytest.fixture(scope="session")
def dataset():
    return load_default_dataset()


@pytest.fixture(scope="session")
def ipos(dataset):
    return load_profile(fixture_path("ipos"), dataset)


@pytest.fixture(scope="session")
def osm(dataset):
    return load_profile(fixture_path("osm"), dataset)


@pytest.fixture(scope="session")
def bhoomi(dataset):
    return load_profile(fixture_path("bhoomi"), dataset)
