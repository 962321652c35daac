"""Classical baselines: Moore-Hodgson and the Lawler-Moore table."""

from __future__ import annotations

import heapq

import numpy as np

from .core import Instance, edd_order
from .errors import BudgetExceeded, NonUniformWeights
from .oracle import OptimalSolution, finish

DEFAULT_PROCESSING_BUDGET = 10**7


def solve_moore(instance: Instance) -> OptimalSolution:
    """Moore-Hodgson for instances whose jobs all carry the same weight.

    Jobs are added in EDD order; whenever the newest job would finish late,
    the longest job scheduled so far is moved to the tardy set.
    """
    weights = {j.w for j in instance.jobs}
    if len(weights) > 1:
        raise NonUniformWeights(f"Moore-Hodgson needs equal weights, got {sorted(weights)}")
    jobs = instance.jobs
    scheduled: list[tuple[int, int]] = []  # (-p, id) so the longest job is on top
    elapsed = 0
    for i in edd_order(instance):
        heapq.heappush(scheduled, (-jobs[i].p, i))
        elapsed += jobs[i].p
        if elapsed > jobs[i].d:
            neg_p, _ = heapq.heappop(scheduled)
            elapsed += neg_p
    early = [i for _, i in scheduled]
    weight = weights.pop() if weights else 0
    return finish(instance, early, "moore", weight * (instance.n - len(early)))


def solve_lawler_moore(
    instance: Instance, budget: int = DEFAULT_PROCESSING_BUDGET
) -> OptimalSolution:
    """Pseudo-polynomial table over the processing time of the early set.

    ``best[t]`` is the largest early weight reachable with early jobs
    totalling exactly ``t`` (``-1`` when no early set has that total), and
    a job may join the early set only if it then finishes by its due date.
    """
    jobs = instance.jobs
    horizon = sum(j.p for j in jobs)
    if horizon > budget:
        raise BudgetExceeded(f"sum of processing times {horizon} exceeds budget {budget}")

    best = np.full(horizon + 1, -1, dtype=np.int64)
    best[0] = 0
    order = edd_order(instance)
    taken: list[np.ndarray] = []
    for i in order:
        p, d, w = jobs[i].p, jobs[i].d, jobs[i].w
        took = np.zeros(horizon + 1, dtype=bool)
        top = min(d, horizon)
        if top >= p:
            source = best[0 : top - p + 1]
            candidate = np.where(source >= 0, source + w, -1)
            target = best[p : top + 1]
            improve = candidate > target
            took[p : top + 1] = improve
            best[p : top + 1] = np.where(improve, candidate, target)
        taken.append(took)

    t = int(np.argmax(best))
    early = []
    for i, took in zip(reversed(order), reversed(taken)):
        if took[t]:
            early.append(i)
            t -= jobs[i].p
    total = sum(j.w for j in jobs)
    return finish(instance, early, "lawler-moore", total - int(best.max()))
