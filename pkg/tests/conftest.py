import re

import pytest

from graphtopos.corpus import graphs_up_to_iso


@pytest.fixture(scope="session")
def corpus():
    """All graphs with at most 3 nodes and 3 arcs, up to isomorphism."""
    return graphs_up_to_iso(3, 3)


@pytest.fixture(scope="session")
def small_corpus():
    return graphs_up_to_iso(2, 2)


@pytest.fixture(scope="session")
def tiny_corpus():
    return graphs_up_to_iso(2, 1)


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        _acceptance[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for nodeid, outcome in sorted(_acceptance.items()):
        m = re.search(r"test_criterion_(\d+)_(\w+)", nodeid)
        label = f"criterion {int(m.group(1)):2d}: {m.group(2).replace('_', ' ')}" if m else nodeid
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {label}")
