from __future__ import annotations

import pytest

from ctxsim import SimilarityEngine, load_case_study

_acceptance_outcomes: dict[str, str] = {}


@pytest.fixture(scope="session")
def case_study():
    return load_case_study()


@pytest.fixture(scope="session")
def engine(case_study):
    return SimilarityEngine(case_study.ontology)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance_outcomes[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # one pass/fail line per acceptance criterion
    if not _acceptance_outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for nodeid in sorted(_acceptance_outcomes):
        outcome = _acceptance_outcomes[nodeid]
        label = nodeid.split("::")[-1].removeprefix("test_")
        terminalreporter.write_line(
            f"{'PASS' if outcome == 'passed' else 'FAIL'}  {label}")
