"""Category dynamic programs, polynomial when the number of distinct
weights (``solve_dp_weight_types``) or distinct processing times
(``solve_dp_proc_types``) is a constant.

Jobs are scanned in EDD order. A *type* is a distinct weight (resp.
processing time) and a *category* is the vector ``(e_1, ..., e_k)`` of
early-job counts per type. For every category the table keeps one dominant
partial schedule: the one with the least early processing time (weight
DP) or the largest early weight (processing-time DP). Each state owns one
persistent heap per type holding the processing times (resp. weights) of
its early jobs of that type, so the job most worth swapping out is always
on top.

States are stored in flat lists indexed by the row-major mixed-radix code
of the category, which makes index order equal lexicographic category
order. Layer ``j`` is computed in place from layer ``j - 1`` by walking the
current job's type coordinate downwards, the same trick as the 0-1
knapsack table. A compact per-layer tag array records how each state was
produced, which is enough to rebuild the early set at the end.
"""

from __future__ import annotations

import gc
import itertools
from array import array
from dataclasses import dataclass

from .core import Instance, edd_order
from .heap import PersistentHeap, node_push, node_replace_top
from .oracle import OptimalSolution, finish


class _Unreachable:
    """Marks a category that no early set of the current prefix realises."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()

# Tag values; a non-negative tag is the id of the job swapped out.
COPY = -2
APPEND = -1

WEIGHT = "weight"
PROC = "proc"


@dataclass
class CategoryTable:
    """DP table after some number of layers.

    ``values[idx]`` is the state value (early processing time for the
    weight DP, early weight for the processing-time DP) and
    ``heaps[t][idx]`` the bare root of the type-``t`` heap. ``tags[j - 1]``
    holds the provenance of every state at layer ``j``.
    """

    kind: str
    instance: Instance
    order: list[int]
    types: tuple[int, ...]
    job_type: list[int]
    populations: tuple[int, ...]
    strides: tuple[int, ...]
    values: list
    heaps: list[list]
    tags: list[array]
    layer: int

    @property
    def size(self) -> int:
        return len(self.values)

    def index(self, category) -> int:
        return sum(e * s for e, s in zip(category, self.strides))

    def category(self, idx: int) -> tuple[int, ...]:
        out = []
        for s in self.strides:
            e, idx = divmod(idx, s)
            out.append(e)
        return tuple(out)

    def categories(self):
        """All categories in lexicographic (= index) order."""
        return itertools.product(*(range(n + 1) for n in self.populations))

    def heap(self, t: int, category) -> PersistentHeap:
        ordering = "max" if self.kind == WEIGHT else "min"
        return PersistentHeap.from_root(ordering, self.heaps[t][self.index(category)])

    def snapshot(self) -> dict[tuple[int, ...], object]:
        return {c: self.values[i] for i, c in enumerate(self.categories())}

    def early_set(self, category) -> set[int]:
        """Rebuild the early set of the state at ``category`` on the current layer."""
        idx = self.index(category)
        steps = []
        for j in range(self.layer, 0, -1):
            job = self.order[j - 1]
            tag = self.tags[j - 1][idx]
            if tag == APPEND:
                steps.append((None, job))
                idx -= self.strides[self.job_type[job]]
            elif tag >= 0:
                steps.append((tag, job))
        early: set[int] = set()
        for out, job in reversed(steps):
            if out is not None:
                early.remove(out)
            early.add(job)
        return early


def _setup(instance: Instance, kind: str) -> CategoryTable:
    order = edd_order(instance)
    attr = "w" if kind == WEIGHT else "p"
    types = tuple(sorted({getattr(j, attr) for j in instance.jobs}))
    position = {v: t for t, v in enumerate(types)}
    job_type = [position[getattr(j, attr)] for j in instance.jobs]
    populations = [0] * len(types)
    for t in job_type:
        populations[t] += 1
    strides = [1] * len(types)
    for t in range(len(types) - 2, -1, -1):
        strides[t] = strides[t + 1] * (populations[t + 1] + 1)
    size = strides[0] * (populations[0] + 1) if types else 1
    values = [UNREACHABLE] * size
    values[0] = 0
    heaps = [[None] * size for _ in types]
    return CategoryTable(
        kind, instance, order, types, job_type, tuple(populations), tuple(strides),
        values, heaps, [], 0,
    )


def _bases(table: CategoryTable, counts: list[int], t: int) -> list[tuple[int, int]]:
    """Index and early processing contribution of every in-range assignment
    of the coordinates other than ``t``."""
    ranges = [range(counts[u] + 1) if u != t else range(1) for u in range(len(counts))]
    unit = table.types if table.kind == PROC else [0] * len(counts)
    out = []
    for combo in itertools.product(*ranges):
        out.append(
            (
                sum(e * s for e, s in zip(combo, table.strides)),
                sum(e * p for e, p in zip(combo, unit)),
            )
        )
    return out


def _advance_weight(table: CategoryTable, counts: list[int]) -> None:
    """One layer of the weight-type DP (minimise early processing time)."""
    j = table.layer
    job_id = table.order[j]
    job = table.instance.jobs[job_id]
    p, d = job.p, job.d
    t = table.job_type[job_id]
    counts[t] += 1
    st = table.strides[t]
    values = table.values
    heap_t = table.heaps[t]
    others = [h for u, h in enumerate(table.heaps) if u != t]
    tags = array("i", [COPY]) * table.size
    bases = [b for b, _ in _bases(table, counts, t)]
    neg_p = -p

    for e_t in range(counts[t], 0, -1):
        offset = e_t * st
        for base in bases:
            idx = base + offset
            old = values[idx]
            prev = values[idx - st]
            best = old
            tag = COPY
            if old is not UNREACHABLE:
                top = heap_t[idx]
                # top[0] is minus the longest type-t processing time
                if top is not None and neg_p > top[0]:
                    best = old + top[0] + p
                    tag = top[1]
            if prev is not UNREACHABLE:
                candidate = prev + p
                if candidate <= d and (best is UNREACHABLE or candidate < best):
                    best = candidate
                    tag = APPEND
            if tag == COPY:
                continue
            values[idx] = best
            tags[idx] = tag
            if tag == APPEND:
                for h in others:
                    h[idx] = h[idx - st]
                heap_t[idx] = node_push(heap_t[idx - st], neg_p, job_id)
            else:
                heap_t[idx] = node_replace_top(heap_t[idx], neg_p, job_id)

    table.tags.append(tags)
    table.layer += 1


def _advance_proc(table: CategoryTable, counts: list[int]) -> None:
    """One layer of the processing-time-type DP (maximise early weight).

    Every early set of a category has the same total processing time, so
    whether the current job can be appended depends on the category alone.
    """
    j = table.layer
    job_id = table.order[j]
    job = table.instance.jobs[job_id]
    w, d = job.w, job.d
    t = table.job_type[job_id]
    counts[t] += 1
    st = table.strides[t]
    unit = table.types[t]
    values = table.values
    heap_t = table.heaps[t]
    others = [h for u, h in enumerate(table.heaps) if u != t]
    tags = array("i", [COPY]) * table.size
    bases = _bases(table, counts, t)

    for e_t in range(counts[t], 0, -1):
        offset = e_t * st
        own = e_t * unit
        for base, base_proc in bases:
            idx = base + offset
            old = values[idx]
            best = old
            tag = COPY
            if old is not UNREACHABLE:
                top = heap_t[idx]
                if top is not None and w > top[0]:
                    best = old - top[0] + w
                    tag = top[1]
            if base_proc + own <= d:
                prev = values[idx - st]
                if prev is not UNREACHABLE:
                    candidate = prev + w
                    if best is UNREACHABLE or candidate > best:
                        best = candidate
                        tag = APPEND
            if tag == COPY:
                continue
            values[idx] = best
            tags[idx] = tag
            if tag == APPEND:
                for h in others:
                    h[idx] = h[idx - st]
                heap_t[idx] = node_push(heap_t[idx - st], w, job_id)
            else:
                heap_t[idx] = node_replace_top(heap_t[idx], w, job_id)

    table.tags.append(tags)
    table.layer += 1


def build_table(instance: Instance, kind: str, upto: int | None = None) -> CategoryTable:
    """Run the ``kind`` DP (``"weight"`` or ``"proc"``) for ``upto`` layers."""
    if kind not in (WEIGHT, PROC):
        raise ValueError(f"kind must be {WEIGHT!r} or {PROC!r}, got {kind!r}")
    n = instance.n
    upto = n if upto is None else upto
    if not 0 <= upto <= n:
        raise ValueError(f"layer must lie in [0, {n}], got {upto}")
    table = _setup(instance, kind)
    counts = [0] * len(table.types)
    step = _advance_weight if kind == WEIGHT else _advance_proc
    # Millions of live heap nodes make cyclic collection passes dominate;
    # the nodes are acyclic tuples, so reference counting suffices.
    paused = gc.isenabled()
    gc.disable()
    try:
        for _ in range(upto):
            step(table, counts)
    finally:
        if paused:
            gc.enable()
    return table


def dp_table_snapshot(instance: Instance, j: int, kind: str) -> dict[tuple[int, ...], object]:
    """Layer-``j`` values over every category, ``UNREACHABLE`` included."""
    return build_table(instance, kind, j).snapshot()


def solve_dp_weight_types(instance: Instance) -> OptimalSolution:
    table = build_table(instance, WEIGHT)
    weights = table.types
    best_cat, best_obj = None, None
    for idx, cat in enumerate(table.categories()):
        if table.values[idx] is UNREACHABLE:
            continue
        obj = sum(w * (n - e) for w, n, e in zip(weights, table.populations, cat))
        if best_obj is None or obj < best_obj:
            best_cat, best_obj = cat, obj
    return finish(instance, table.early_set(best_cat), "dp-w", best_obj)


def solve_dp_proc_types(instance: Instance) -> OptimalSolution:
    table = build_table(instance, PROC)
    best_cat, best_weight = None, None
    for idx, cat in enumerate(table.categories()):
        value = table.values[idx]
        if value is UNREACHABLE:
            continue
        if best_weight is None or value > best_weight:
            best_cat, best_weight = cat, value
    total = sum(j.w for j in instance.jobs)
    return finish(instance, table.early_set(best_cat), "dp-p", total - best_weight)
