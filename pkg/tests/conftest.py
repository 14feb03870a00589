"""Shared fixtures and the per-criterion acceptance summary."""

from __future__ import annotations

import pytest

from toricinterp.exact import Matrix

A1 = Matrix([[1, 1, 1, 1], [0, 1, 2, 3]])
A2 = Matrix([[3, 2, 1, 0], [0, 1, 2, 3]])
# rank 2 with three rows: same row span as A1
A3 = Matrix([[1, 1, 1, 1], [0, 1, 2, 3], [1, 2, 3, 4]])
DEL_PEZZO = Matrix([[1] * 7, [0, 1, 0, 1, 1, 2, 2], [0, 0, 1, 1, 2, 1, 2]])

_criteria: dict[int, str] = {}
_outcomes: dict[int, list[bool]] = {}
_node_criterion: dict[str, int] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            n, title = mark.args
            _criteria[n] = title
            _node_criterion[item.nodeid] = n


def pytest_runtest_logreport(report):
    n = _node_criterion.get(report.nodeid)
    if n is None:
        return
    if report.when == "call" or report.failed or report.skipped:
        _outcomes.setdefault(n, []).append(report.passed and report.when == "call")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        results = _outcomes.get(n, [])
        status = "PASS" if results and all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d} {status}  {_criteria[n]}")


@pytest.fixture
def a1():
    return A1


@pytest.fixture
def del_pezzo():
    return DEL_PEZZO
