import time

import pytest
from hypothesis import HealthCheck, settings

from hyperpoincare.hypergraph import FamilySpec, build_family

settings.register_profile(
    "fixed-seed", derandomize=True, max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("fixed-seed")


@pytest.fixture
def family():
    def make(name, n, d=2, alpha=1):
        return build_family(FamilySpec(name, n, d, alpha))

    return make


# ---------------------------------------------------------------------------
# acceptance bookkeeping: each criterion records one PASS/FAIL line, echoed
# immediately and again in the terminal summary

_acceptance_lines = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_acceptance_lines] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_acceptance_lines, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)


class Criterion:
    def __init__(self, sink, capsys, number, title, limit):
        self.sink, self.capsys = sink, capsys
        self.number, self.title, self.limit = number, title, limit
        self.failures: list[str] = []
        self.checked = 0

    def check(self, ok, message):
        self.checked += 1
        if not ok:
            self.failures.append(message)

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc is not None:
            self.failures.append(f"{exc_type.__name__}: {exc}")
        if elapsed > self.limit:
            self.failures.append(f"took {elapsed:.2f}s, limit {self.limit}s")
        status = "FAIL" if self.failures else "PASS"
        line = f"criterion {self.number}: {status}  {self.title}  ({self.checked} checks, {elapsed:.2f}s / {self.limit}s)"
        self.sink.append(line)
        with self.capsys.disabled():
            print(f"\n{line}")
        if self.failures and exc is None:
            shown = "\n  ".join(self.failures[:20])
            raise AssertionError(f"criterion {self.number} failed:\n  {shown}")
        return False


@pytest.fixture
def criterion(request, capsys):
    sink = request.config.stash[_acceptance_lines]

    def make(number, title, limit):
        return Criterion(sink, capsys, number, title, limit)

    return make
