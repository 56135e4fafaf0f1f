import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from nchilbert.algebra import Operator, TracedAlgebra

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

PARTITIONS = ("flag", "halves", "single")

_ACCEPTANCE: list[tuple[str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(cid, text): exit criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        cid, text = mark.args
        status = "PASS" if rep.passed else ("SKIP" if rep.skipped else "FAIL")
        _ACCEPTANCE.append((cid, status, text))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    grouped: dict[str, tuple[str, list[str]]] = {}
    for cid, status, text in _ACCEPTANCE:
        grouped.setdefault(cid, (text, []))[1].append(status)
    for cid in sorted(grouped):
        text, statuses = grouped[cid]
        status = "FAIL" if "FAIL" in statuses else ("SKIP" if "SKIP" in statuses else "PASS")
        cases = f" [{len(statuses)} cases]" if len(statuses) > 1 else ""
        terminalreporter.write_line(f"{status} {cid} {text}{cases}")


def gaussian(rng, n):
    return rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def m22():
    return Operator(TracedAlgebra.flag(2), np.array([[1, 2], [3, 4]], dtype=complex))
