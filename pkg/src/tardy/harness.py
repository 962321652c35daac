"""Randomised cross-checking against the oracle, and runtime scaling fits."""

from __future__ import annotations

import time
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from .core import Instance, stats
from .generate import assign_values, distinct_values, generate_instance, make_rng
from .io import dumps_instance
from .oracle import solve_bruteforce
from .solvers import crosscheck_runs, solve


@dataclass
class CrosscheckReport:
    passed: bool
    lines: list[str] = field(default_factory=list)
    counterexample: Instance | None = None

    @property
    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def random_case(seed: int, index: int, size: int, caps: tuple[int, int, int]) -> Instance:
    """Instance ``index`` of the cross-check stream for ``seed``."""
    rng = make_rng(seed, index)
    n = int(rng.integers(1, size + 1))
    nus = [int(rng.integers(1, min(cap, n) + 1)) for cap in caps]
    return generate_instance(n, *nus, seed=(seed, index, 1), name=f"case-{seed}-{index}")


def crosscheck(
    count: int,
    size: int,
    caps: tuple[int, int, int] = (3, 3, 3),
    seed: int = 0,
) -> CrosscheckReport:
    """Run every applicable solver on ``count`` random instances.

    Stops at the first objective that differs from the oracle and keeps that
    instance as the counterexample. The report is free of timings, so equal
    arguments give identical text.
    """
    if size < 1:
        raise ValueError("size must be at least 1")
    report = CrosscheckReport(True)
    report.lines.append(f"crosscheck count={count} size={size} caps={caps} seed={seed}")
    for index in range(count):
        instance = random_case(seed, index, size, caps)
        expected = solve_bruteforce(instance).objective
        st = stats(instance)
        for algo, engine in crosscheck_runs(instance):
            got = solve(instance, algo, engine if engine != "-" else "mip").objective
            if got != expected:
                report.passed = False
                report.counterexample = instance
                report.lines.append(
                    f"FAIL case {index}: {algo}[{engine}] objective {got} != oracle {expected}"
                )
                report.lines.append(dumps_instance(instance).rstrip("\n"))
                return report
        report.lines.append(
            f"case {index:04d} n={instance.n} nu=({st.nu_d},{st.nu_p},{st.nu_w}) "
            f"oracle={expected} ok"
        )
    report.lines.append(f"PASS {count}/{count}")
    return report


BENCH_P_RANGE = (1, 100)
BENCH_W_RANGE = (1, 100)


def _width(bounds: tuple[int, int]) -> int:
    return bounds[1] - bounds[0] + 1


def bench_instance(n: int, nu_d=None, nu_p=None, nu_w=None, seed: int = 0) -> Instance:
    """Benchmark family for scaling fits.

    A fixed count of processing times or weights draws its value pool from
    ``seed`` alone, so every size shares the same pool and only ``n``
    changes. Unspecified counts take as many values as the range allows.
    Due dates span ``[1, 25n]`` and are always drawn per size.
    """
    d_range = (1, 25 * max(n, 1))
    rng = make_rng(seed, n)

    def pool(count, bounds, stream):
        if count is None:
            return distinct_values(rng, *bounds, min(n, _width(bounds)))
        if not 1 <= count <= n:
            raise ValueError(f"a count of {count} distinct values needs 1 <= count <= n={n}")
        return distinct_values(make_rng(seed, stream), *bounds, count)

    ps = assign_values(rng, n, pool(nu_p, BENCH_P_RANGE, 1))
    ws = assign_values(rng, n, pool(nu_w, BENCH_W_RANGE, 2))
    ds = assign_values(rng, n, distinct_values(rng, *d_range, nu_d or min(n, _width(d_range))))
    return Instance.from_tuples(zip(ps, ds, ws), f"bench-{seed}-{n}")


@dataclass
class BenchReport:
    algorithm: str
    rows: list[dict]
    loglog_slope: float | None
    log2_per_job: float | None

    def as_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "rows": self.rows,
            "loglog_slope": self.loglog_slope,
            "log2_per_job": self.log2_per_job,
        }


def bench(
    algo: str,
    sizes: Sequence[int],
    nu_d: int | None = None,
    nu_p: int | None = None,
    nu_w: int | None = None,
    seed: int = 0,
    repeat: int = 1,
    engine: str = "mip",
) -> BenchReport:
    """Best-of-``repeat`` wall time per size, with least-squares fits of
    ``log t`` against ``log n`` and of ``log2 t`` against ``n``."""
    rows = []
    for n in sizes:
        instance = bench_instance(n, nu_d, nu_p, nu_w, seed)
        best = None
        for _ in range(repeat):
            start = time.perf_counter()
            solution = solve(instance, algo, engine)
            elapsed = time.perf_counter() - start
            best = elapsed if best is None else min(best, elapsed)
        rows.append({"n": n, "seconds": best, "objective": solution.objective})
    slope = per_job = None
    if len(rows) >= 2:
        ns = np.array([r["n"] for r in rows], dtype=float)
        ts = np.array([max(r["seconds"], 1e-9) for r in rows])
        slope = float(np.polyfit(np.log(ns), np.log(ts), 1)[0])
        per_job = float(np.polyfit(ns, np.log2(ts), 1)[0])
    return BenchReport(algo, rows, slope, per_job)
