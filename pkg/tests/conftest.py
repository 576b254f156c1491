import random

import pytest

from densecolor.graph import SimpleGraph


def complete_graph(n: int) -> SimpleGraph:
    g = SimpleGraph(n)
    for u in range(n):
        for v in range(u + 1, n):
            g.add_edge(u, v)
    return g


def complete_minus_pm(n: int) -> SimpleGraph:
    """K_n minus the perfect matching {(0,1), (2,3), ...}; n even."""
    g = complete_graph(n)
    for i in range(0, n, 2):
        g.remove_edge(i, i + 1)
    return g


def petersen() -> SimpleGraph:
    g = SimpleGraph(10)
    for i in range(5):
        g.add_edge(i, (i + 1) % 5)          # outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5)  # inner pentagram
        g.add_edge(i, 5 + i)                # spokes
    return g


def cycle_graph(n: int) -> SimpleGraph:
    g = SimpleGraph(n)
    for i in range(n):
        g.add_edge(i, (i + 1) % n)
    return g


def random_graph(n: int, p: float, seed: int) -> SimpleGraph:
    rng = random.Random(seed)
    g = SimpleGraph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


# ---------------------------------------------------------------------------
# acceptance-criteria reporting: one line per criterion in the summary

_CRITERIA: dict[int, tuple[bool, str]] = {}


def record_criterion(num: int, ok: bool, detail: str) -> None:
    _CRITERIA[num] = (ok, detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        ok, detail = _CRITERIA[num]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"CRITERION {num}: {verdict} - {detail}")
