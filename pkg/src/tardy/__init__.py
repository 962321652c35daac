"""Exact solvers for single-machine scheduling with weighted tardy jobs."""

from .classic import solve_lawler_moore, solve_moore
from .core import (
    ClassKind,
    ClassPartition,
    Instance,
    InstanceStats,
    Job,
    JobClass,
    ScheduleResult,
    edd_order,
    evaluate_early_set,
    partition_classes,
    stats,
    total_weight,
)
from .dp import UNREACHABLE, dp_table_snapshot, solve_dp_proc_types, solve_dp_weight_types
from .errors import (
    BudgetExceeded,
    EmptyInstance,
    FormulationBug,
    InstanceOverflow,
    InvalidInstance,
    NonUniformWeights,
    TardyError,
    TooLarge,
)
from .heap import PersistentHeap
from .mip import solve_fpt, solve_lattice, solve_mip
from .model import (
    LinearModel,
    ModelSolution,
    RoundingTrace,
    Status,
    build_dp_model,
    build_dw_model,
    build_pw_model,
    extract_schedule,
    round_pw_solution,
)
from .oracle import OptimalSolution, solve_bruteforce
from .simplex import solve_lp
from .solvers import ALGORITHMS, solve

__all__ = [
    "ALGORITHMS",
    "BudgetExceeded",
    "ClassKind",
    "ClassPartition",
    "EmptyInstance",
    "FormulationBug",
    "Instance",
    "InstanceOverflow",
    "InstanceStats",
    "InvalidInstance",
    "Job",
    "JobClass",
    "LinearModel",
    "ModelSolution",
    "NonUniformWeights",
    "OptimalSolution",
    "PersistentHeap",
    "RoundingTrace",
    "ScheduleResult",
    "Status",
    "TardyError",
    "TooLarge",
    "UNREACHABLE",
    "build_dp_model",
    "build_dw_model",
    "build_pw_model",
    "dp_table_snapshot",
    "edd_order",
    "evaluate_early_set",
    "extract_schedule",
    "partition_classes",
    "round_pw_solution",
    "solve",
    "solve_bruteforce",
    "solve_dp_proc_types",
    "solve_dp_weight_types",
    "solve_fpt",
    "solve_lattice",
    "solve_lawler_moore",
    "solve_lp",
    "solve_mip",
    "solve_moore",
    "stats",
    "total_weight",
]
