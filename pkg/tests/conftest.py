import re
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE: dict = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    k = int(m.group(1))
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE[k] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"ACCEPTANCE criterion {k}: {_ACCEPTANCE[k]}")


@pytest.fixture(scope="session")
def corpus():
    """Every construction of the generation step for 2 <= n <= 6, repeats included."""
    from mvbl.enumeration import generation_corpus

    return generation_corpus(6)


@pytest.fixture(scope="session")
def classes():
    """One representative per isomorphism class, 2 <= n <= 6."""
    from mvbl.enumeration import enumerate_bl

    return [L for n in range(2, 7) for L in enumerate_bl(n)]
