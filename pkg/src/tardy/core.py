"""Domain types and schedule evaluation for 1||sum w_j U_j.

A schedule is described by its set of early jobs: sequencing those jobs by
earliest due date from time zero is always at least as good as any other
order of the same set, so every solver in the package returns an early set
and lets :func:`evaluate_early_set` build the concrete sequence.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .errors import EmptyInstance, InstanceOverflow, InvalidInstance

# Headroom for sums and products over an instance; keeps every intermediate
# below the signed 64-bit range.
INT_LIMIT = 2**62


@dataclass(frozen=True)
class Job:
    id: int
    p: int
    d: int
    w: int

    def __post_init__(self) -> None:
        for name in ("id", "p", "d", "w"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidInstance(f"job field {name!r} must be an int, got {value!r}")
            if value < 0:
                raise InvalidInstance(f"job {self.id}: {name} must be non-negative, got {value}")
            if value >= INT_LIMIT:
                raise InstanceOverflow(f"job {self.id}: {name}={value} exceeds 2^62")


@dataclass(frozen=True)
class Instance:
    """An ordered collection of jobs with ids ``0..n-1``."""

    jobs: tuple[Job, ...]
    name: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "jobs", tuple(self.jobs))
        for index, job in enumerate(self.jobs):
            if job.id != index:
                raise InvalidInstance(f"job at position {index} has id {job.id}")
        if sum(j.p for j in self.jobs) >= INT_LIMIT:
            raise InstanceOverflow("total processing time exceeds 2^62")
        if sum(j.w for j in self.jobs) >= INT_LIMIT:
            raise InstanceOverflow("total weight exceeds 2^62")
        if self.jobs:
            biggest = max(max(j.p, j.d, j.w) for j in self.jobs)
            if len(self.jobs) * biggest >= INT_LIMIT:
                raise InstanceOverflow("n * max(value) exceeds 2^62")

    @classmethod
    def from_tuples(cls, rows: Iterable[Sequence[int]], name: str | None = None) -> Instance:
        """Build an instance from ``(p, d, w)`` triples."""
        return cls(tuple(Job(i, p, d, w) for i, (p, d, w) in enumerate(rows)), name)

    def __len__(self) -> int:
        return len(self.jobs)

    @property
    def n(self) -> int:
        return len(self.jobs)

    def without(self, job_id: int) -> Instance:
        """Copy of the instance with one job removed and ids renumbered."""
        rows = [(j.p, j.d, j.w) for j in self.jobs if j.id != job_id]
        return Instance.from_tuples(rows, self.name)


@dataclass(frozen=True)
class InstanceStats:
    nu_d: int
    nu_p: int
    nu_w: int


class ClassKind(str, enum.Enum):
    """Attribute pair shared by all jobs of a class."""

    DUE_PROC = "due+proc"
    DUE_WEIGHT = "due+weight"
    PROC_WEIGHT = "proc+weight"


@dataclass(frozen=True)
class JobClass:
    """Jobs sharing an attribute pair.

    The attribute not fixed by the kind is left as ``None``; ``values``
    holds that free attribute for each member, in member order.
    """

    members: tuple[int, ...]
    values: tuple[int, ...] = ()
    p: int | None = None
    d: int | None = None
    w: int | None = None

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class ClassPartition:
    kind: ClassKind
    classes: tuple[JobClass, ...]
    due_levels: tuple[int, ...]
    # delta[i][l] = members of class i whose due date is due_levels[l];
    # only filled for PROC_WEIGHT.
    delta: tuple[tuple[int, ...], ...] = ()

    @property
    def k(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class ScheduleResult:
    early: frozenset[int]
    order: tuple[int, ...]
    objective: int
    completion: tuple[int, ...] = field(repr=False)

    def is_early(self, job_id: int) -> bool:
        return job_id in self.early


def edd_order(instance: Instance) -> list[int]:
    """Job ids sorted by ``(due date, id)``."""
    return sorted(range(instance.n), key=lambda i: (instance.jobs[i].d, i))


def evaluate_early_set(instance: Instance, early: Iterable[int]) -> ScheduleResult | None:
    """Schedule ``early`` in EDD order from time zero, tardy jobs after.

    Returns ``None`` when some member of ``early`` would finish after its
    due date, i.e. the set cannot be realised as an early set.
    """
    early = frozenset(early)
    n = instance.n
    for job_id in early:
        if not 0 <= job_id < n:
            raise InvalidInstance(f"unknown job id {job_id}")
    jobs = instance.jobs
    head = sorted(early, key=lambda i: (jobs[i].d, i))
    tail = [i for i in range(n) if i not in early]
    completion = [0] * n
    t = 0
    for i in head:
        t += jobs[i].p
        if t > jobs[i].d:
            return None
        completion[i] = t
    for i in tail:
        t += jobs[i].p
        completion[i] = t
    objective = sum(jobs[i].w for i in tail)
    return ScheduleResult(early, tuple(head + tail), objective, tuple(completion))


def _group(instance: Instance, key) -> dict[tuple[int, int], list[int]]:
    groups: dict[tuple[int, int], list[int]] = {}
    for job in instance.jobs:
        groups.setdefault(key(job), []).append(job.id)
    return groups


def partition_classes(instance: Instance, kind: ClassKind | str) -> ClassPartition:
    """Group jobs by the attribute pair of ``kind``.

    Member order inside a class follows the exchange argument for that
    kind: by weight for due+proc (least weighted go tardy first), by
    processing time for due+weight (shortest stay early first), by due
    date for proc+weight. Ties are broken by job id.
    """
    kind = ClassKind(kind)
    jobs = instance.jobs
    due_levels = tuple(sorted({j.d for j in jobs}))
    classes: list[JobClass] = []
    delta: list[tuple[int, ...]] = []

    if kind is ClassKind.DUE_PROC:
        for (d, p), ids in sorted(_group(instance, lambda j: (j.d, j.p)).items()):
            ids.sort(key=lambda i: (jobs[i].w, i))
            classes.append(JobClass(tuple(ids), tuple(jobs[i].w for i in ids), p=p, d=d))
    elif kind is ClassKind.DUE_WEIGHT:
        for (d, w), ids in sorted(_group(instance, lambda j: (j.d, j.w)).items()):
            ids.sort(key=lambda i: (jobs[i].p, i))
            classes.append(JobClass(tuple(ids), tuple(jobs[i].p for i in ids), d=d, w=w))
    else:
        level_of = {d: l for l, d in enumerate(due_levels)}
        for (p, w), ids in sorted(_group(instance, lambda j: (j.p, j.w)).items()):
            ids.sort(key=lambda i: (jobs[i].d, i))
            classes.append(JobClass(tuple(ids), tuple(jobs[i].d for i in ids), p=p, w=w))
            row = [0] * len(due_levels)
            for i in ids:
                row[level_of[jobs[i].d]] += 1
            delta.append(tuple(row))

    return ClassPartition(kind, tuple(classes), due_levels, tuple(delta))


def stats(instance: Instance) -> InstanceStats:
    if instance.n == 0:
        raise EmptyInstance("stats of an empty instance are undefined")
    jobs = instance.jobs
    return InstanceStats(
        nu_d=len({j.d for j in jobs}),
        nu_p=len({j.p for j in jobs}),
        nu_w=len({j.w for j in jobs}),
    )


def total_weight(instance: Instance) -> int:
    total = sum(j.w for j in instance.jobs)
    if total >= INT_LIMIT:
        raise InstanceOverflow("total weight exceeds 2^62")
    return total
