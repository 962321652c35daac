"""Exhaustive reference solvers.

``solve_bruteforce`` enumerates every subset of jobs as a candidate early
set. It is deliberately free of pruning so that its correctness is evident;
every other solver is tested against it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .core import Instance, ScheduleResult, edd_order, evaluate_early_set
from .errors import FormulationBug, TooLarge

DEFAULT_ORACLE_CAP = 22
_CHUNK_BITS = 18


@dataclass(frozen=True)
class OptimalSolution:
    """Return type shared by every solver."""

    objective: int
    result: ScheduleResult
    algorithm: str

    @property
    def early(self) -> frozenset[int]:
        return self.result.early


def finish(instance: Instance, early, algorithm: str, objective: int | None = None) -> OptimalSolution:
    """Evaluate ``early`` and wrap it, checking it against a claimed objective."""
    result = evaluate_early_set(instance, early)
    if result is None:
        raise FormulationBug(f"{algorithm}: early set {sorted(early)} is not feasible")
    if objective is not None and result.objective != objective:
        raise FormulationBug(
            f"{algorithm}: claimed objective {objective} but early set gives {result.objective}"
        )
    return OptimalSolution(result.objective, result, algorithm)


def oracle_cap() -> int:
    raw = os.environ.get("TARDY_ORACLE_CAP")
    return int(raw) if raw else DEFAULT_ORACLE_CAP


def solve_bruteforce(instance: Instance, cap: int | None = None) -> OptimalSolution:
    """Minimum tardy weight by enumerating all ``2**n`` early sets.

    Bit ``i`` of a mask stands for job ``i``. Among optimal sets the one
    with the smallest mask value is returned.
    """
    cap = oracle_cap() if cap is None else cap
    n = instance.n
    if n > cap:
        raise TooLarge(f"brute force is capped at n={cap}, got n={n}")
    jobs = instance.jobs
    order = edd_order(instance)
    total = sum(j.w for j in jobs)

    size = 1 << n
    chunk = 1 << min(n, _CHUNK_BITS)
    best_mask, best_obj = 0, total
    for start in range(0, size, chunk):
        masks = np.arange(start, start + chunk, dtype=np.int64)
        elapsed = np.zeros(chunk, dtype=np.int64)
        early_weight = np.zeros(chunk, dtype=np.int64)
        feasible = np.ones(chunk, dtype=bool)
        for i in order:
            bit = ((masks >> i) & 1).astype(bool)
            elapsed += np.where(bit, jobs[i].p, 0)
            early_weight += np.where(bit, jobs[i].w, 0)
            feasible &= ~bit | (elapsed <= jobs[i].d)
        tardy = np.where(feasible, total - early_weight, np.iinfo(np.int64).max)
        pos = int(np.argmin(tardy))
        if tardy[pos] < best_obj:
            best_obj, best_mask = int(tardy[pos]), start + pos

    early = [i for i in range(n) if best_mask >> i & 1]
    return finish(instance, early, "oracle", best_obj)


def knapsack_max_value(values, sizes, capacity: int) -> int:
    """Textbook 0-1 knapsack table over capacities ``0..capacity``."""
    best = [0] * (capacity + 1)
    for value, item_size in zip(values, sizes):
        for c in range(capacity, item_size - 1, -1):
            candidate = best[c - item_size] + value
            if candidate > best[c]:
                best[c] = candidate
    return best[capacity]
