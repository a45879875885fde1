import sys
from pathlib import Path

import pytest

from mltt.errors import Fuel
from mltt.frontend.cli import Session

sys.setrecursionlimit(20_000)

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
WELL_TYPED = sorted((CORPUS / "well_typed").glob("*.mltt")) + [CORPUS / "arith.mltt"]
ILL_TYPED = sorted((CORPUS / "ill_typed").glob("*.mltt"))


def load_corpus():
    """(file, name, body, type) for every definition of the well-typed corpus."""
    out = []
    for path in WELL_TYPED:
        session = Session(Fuel(10**7))
        session.load(path.read_text())
        for name, body in session.defs.items():
            out.append((path.name, name, body, session.types[name]))
    return out


@pytest.fixture(scope="session")
def corpus_defs():
    return load_corpus()


# -- acceptance summary: one line per criterion

_criteria: dict[int, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and report.passed:
        return
    n, title = marker.args
    ok = report.passed and _criteria.get(n, (title, True))[1]
    _criteria[n] = (title, ok)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, ok = _criteria[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {n:2d}: {title}")
