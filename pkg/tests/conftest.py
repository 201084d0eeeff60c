"""Shared session fixtures.

The heavy artifacts (the full pipeline run, the reference alignment, the
condition-III census) are memoized inside the package, so these fixtures
are cheap to request from any test module.
"""

from __future__ import annotations

import pytest

from ncpverify.fixtures import load_fixtures
from ncpverify.pipeline import compare_fixture, condition_iii_survey, run_theorem5


@pytest.fixture(scope="session")
def fixture_set():
    return load_fixtures()


@pytest.fixture(scope="session")
def pipeline_report():
    return run_theorem5(7)


@pytest.fixture(scope="session")
def alignment_table(pipeline_report):
    return compare_fixture(pipeline_report)


@pytest.fixture(scope="session")
def survey():
    return condition_iii_survey(7)
