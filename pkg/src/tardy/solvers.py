"""Name-based dispatch over every solver in the package."""

from __future__ import annotations

from collections.abc import Callable

from .classic import solve_lawler_moore, solve_moore
from .core import ClassKind, Instance
from .dp import solve_dp_proc_types, solve_dp_weight_types
from .mip import solve_fpt
from .oracle import OptimalSolution, solve_bruteforce

ALGORITHMS: dict[str, Callable[[Instance, str], OptimalSolution]] = {
    "oracle": lambda inst, engine: solve_bruteforce(inst),
    "moore": lambda inst, engine: solve_moore(inst),
    "lawler-moore": lambda inst, engine: solve_lawler_moore(inst),
    "dp-w": lambda inst, engine: solve_dp_weight_types(inst),
    "dp-p": lambda inst, engine: solve_dp_proc_types(inst),
    "fpt-dp": lambda inst, engine: solve_fpt(inst, ClassKind.DUE_PROC, engine),
    "fpt-dw": lambda inst, engine: solve_fpt(inst, ClassKind.DUE_WEIGHT, engine),
    "fpt-pw": lambda inst, engine: solve_fpt(inst, ClassKind.PROC_WEIGHT, engine),
}

FPT_ALGORITHMS = ("fpt-dp", "fpt-dw", "fpt-pw")


def solve(instance: Instance, algo: str, engine: str = "mip") -> OptimalSolution:
    try:
        fn = ALGORITHMS[algo]
    except KeyError:
        raise ValueError(f"unknown algorithm {algo!r}; choose from {sorted(ALGORITHMS)}") from None
    return fn(instance, engine)


def applicable(algo: str, instance: Instance) -> bool:
    if algo == "moore":
        return len({j.w for j in instance.jobs}) <= 1
    return True


def crosscheck_runs(instance: Instance) -> list[tuple[str, str]]:
    """``(algorithm, engine)`` pairs a cross-check runs on ``instance``."""
    runs = []
    for algo in ALGORITHMS:
        if algo == "oracle" or not applicable(algo, instance):
            continue
        if algo in FPT_ALGORITHMS:
            runs.extend((algo, e) for e in ("mip", "lattice"))
        else:
            runs.append((algo, "-"))
    return runs
