from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from tardy import Instance
from tardy.core import edd_order

THREE_JOBS = [(2, 2, 3), (2, 3, 1), (1, 3, 2)]

ACCEPTANCE: list[str] = []


@pytest.fixture
def three_jobs() -> Instance:
    return Instance.from_tuples(THREE_JOBS)


@st.composite
def instances(draw, max_n: int = 8, max_value: int = 12, min_n: int = 0):
    rows = draw(
        st.lists(
            st.tuples(
                st.integers(0, max_value), st.integers(0, 3 * max_value), st.integers(0, max_value)
            ),
            min_size=min_n,
            max_size=max_n,
        )
    )
    return Instance.from_tuples(rows)


def feasible_subsets(instance: Instance, prefix: int | None = None):
    """Every early set of the first ``prefix`` EDD jobs that keeps all members on time."""
    order = edd_order(instance)[: instance.n if prefix is None else prefix]
    for r in range(len(order) + 1):
        for combo in itertools.combinations(order, r):
            t = 0
            ok = True
            for i in sorted(combo, key=order.index):
                t += instance.jobs[i].p
                if t > instance.jobs[i].d:
                    ok = False
                    break
            if ok:
                yield frozenset(combo)


def category_optimum(instance: Instance, prefix: int, kind: str) -> dict:
    """Per-category DP value by plain subset enumeration.

    ``kind="weight"``: minimum early processing time, categories count
    early jobs per distinct weight. ``kind="proc"``: maximum early weight,
    categories per distinct processing time.
    """
    attr = "w" if kind == "weight" else "p"
    types = sorted({getattr(j, attr) for j in instance.jobs})
    best: dict = {}
    for early in feasible_subsets(instance, prefix):
        cat = tuple(sum(1 for i in early if getattr(instance.jobs[i], attr) == t) for t in types)
        if kind == "weight":
            value = sum(instance.jobs[i].p for i in early)
            best[cat] = min(best.get(cat, value), value)
        else:
            value = sum(instance.jobs[i].w for i in early)
            best[cat] = max(best.get(cat, value), value)
    return best


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
