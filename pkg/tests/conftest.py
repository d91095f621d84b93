"""Shared fixtures: a small works/authors/keywords instance used throughout.

Five works, four authors, four keywords; the same toy bibliography is used
for golden-value tests and for quick structural checks in module tests.
"""

import pytest

from linknet import NodeSet, SparseNetwork

WORKS = ("w1", "w2", "w3", "w4", "w5")
AUTHORS = ("a1", "a2", "a3", "a4")
KEYWORDS = ("k1", "k2", "k3", "k4")

#: Which authors wrote each work.
WORK_AUTHORS = {
    "w1": ("a1", "a3"),
    "w2": ("a1", "a2"),
    "w3": ("a1", "a3", "a4"),
    "w4": ("a2", "a4"),
    "w5": ("a1", "a3", "a4"),
}

#: Which keywords each work carries.
WORK_KEYWORDS = {
    "w1": ("k1", "k2"),
    "w2": ("k1", "k3"),
    "w3": ("k2", "k3", "k4"),
    "w4": ("k3",),
    "w5": ("k2", "k4"),
}


def membership_network(
    rows: NodeSet, cols: NodeSet, members: dict[str, tuple[str, ...]]
) -> SparseNetwork:
    return SparseNetwork(
        rows,
        cols,
        [
            (rows.index(r), cols.index(c), 1.0)
            for r, cs in members.items()
            for c in cs
        ],
    )


@pytest.fixture(scope="session")
def works():
    return NodeSet("works", WORKS)


@pytest.fixture(scope="session")
def authors():
    return NodeSet("authors", AUTHORS)


@pytest.fixture(scope="session")
def keywords():
    return NodeSet("keywords", KEYWORDS)


@pytest.fixture(scope="session")
def wa(works, authors):
    """Binary works-by-authors network of the toy bibliography."""
    return membership_network(works, authors, WORK_AUTHORS)


@pytest.fixture(scope="session")
def wk(works, keywords):
    """Binary works-by-keywords network of the toy bibliography."""
    return membership_network(works, keywords, WORK_KEYWORDS)


# -- acceptance reporting -----------------------------------------------------
#
# tests/test_acceptance.py holds one test per acceptance criterion; print a
# compact PASS/FAIL line for each so a criterion's status is visible at a
# glance in the terminal summary.

_acceptance_outcomes: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _acceptance_outcomes[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_acceptance_outcomes):
        outcome = _acceptance_outcomes[nodeid]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{verdict}  {name}")
