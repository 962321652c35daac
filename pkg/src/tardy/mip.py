"""Integer engines over :class:`~tardy.model.LinearModel` and the
end-to-end class-formulation solvers.

``solve_mip`` is a best-first branch-and-bound on the exact simplex.
``solve_lattice`` walks every tardy-count vector of a class partition;
once the tardy counts are fixed the remaining variables are determined
(prefix sums of the sorted classes, or latest-due-level filling), so the
scan is exact and only exponential in the number of classes.
"""

from __future__ import annotations

import heapq
import itertools
import math
from fractions import Fraction

from .core import ClassKind, Instance, partition_classes
from .errors import BudgetExceeded, FormulationBug
from .model import (
    LE,
    Constraint,
    LinearModel,
    ModelSolution,
    Status,
    build_model,
    extract_schedule,
    round_pw_solution,
    saturate_latest,
)
from .oracle import OptimalSolution, finish
from .simplex import solve_lp

DEFAULT_NODE_BUDGET = 10**6
DEFAULT_LATTICE_BUDGET = 10**7

ENGINES = ("mip", "lattice")
ALGORITHM_NAMES = {
    ClassKind.DUE_PROC: "fpt-dp",
    ClassKind.DUE_WEIGHT: "fpt-dw",
    ClassKind.PROC_WEIGHT: "fpt-pw",
}


def _branch_variable(values, integral: list[int]) -> int | None:
    """Integral variable farthest from an integer; lowest index on ties."""
    best, best_gap = None, Fraction(0)
    for i in integral:
        frac = values[i] - math.floor(values[i])
        gap = min(frac, 1 - frac)
        if gap > best_gap:
            best, best_gap = i, gap
    return best


def _polish(model: LinearModel, solution: ModelSolution) -> ModelSolution:
    """Among optima sharing the integral part, pick the least continuous mass.

    The continuous variables of the formulations are bounded below by
    their intended values; pushing them down makes the returned vertex
    the canonical one.
    """
    continuous = [i for i, v in enumerate(model.vars) if not v.integral and v.lower is not None]
    if not continuous:
        return solution
    lower = [v.lower for v in model.vars]
    upper = [v.upper for v in model.vars]
    for i in model.integral_indices:
        lower[i] = upper[i] = solution.values[i]
    cap = Constraint(model.objective, LE, solution.objective, "objective_cap")
    objective = tuple(1 if i in continuous else 0 for i in range(len(model.vars)))
    helper = LinearModel(model.vars, model.constraints + (cap,), objective, model.kind)
    polished = solve_lp(helper, lower, upper)
    if polished.status is not Status.OPTIMAL:
        return solution
    return ModelSolution(
        Status.OPTIMAL, polished.values, model.evaluate(polished.values),
        solution.names, solution.nodes,
    )


def solve_mip(model: LinearModel, node_budget: int = DEFAULT_NODE_BUDGET) -> ModelSolution:
    """Exact optimum by best-first branch-and-bound.

    Nodes are explored in order of LP bound (ties by creation order) and
    branch on the most fractional integral variable with floor/ceil bounds.
    """
    integral = model.integral_indices
    root = solve_lp(model)
    if not integral or root.status is not Status.OPTIMAL:
        return root

    incumbent: ModelSolution | None = None
    counter = itertools.count()
    lower0 = [v.lower for v in model.vars]
    upper0 = [v.upper for v in model.vars]
    frontier = [(root.objective, next(counter), lower0, upper0, root)]
    nodes = 1

    def consider(sol: ModelSolution, lower, upper) -> None:
        nonlocal incumbent
        if sol.status is not Status.OPTIMAL:
            return
        if incumbent is not None and sol.objective >= incumbent.objective:
            return
        if _branch_variable(sol.values, integral) is None:
            incumbent = sol
        else:
            heapq.heappush(frontier, (sol.objective, next(counter), lower, upper, sol))

    if _branch_variable(root.values, integral) is None:
        incumbent, frontier = root, []

    while frontier:
        bound, _, lower, upper, sol = heapq.heappop(frontier)
        if incumbent is not None and bound >= incumbent.objective:
            break
        var = _branch_variable(sol.values, integral)
        value = sol.values[var]
        for side in ("down", "up"):
            if nodes >= node_budget:
                raise BudgetExceeded(f"branch-and-bound exceeded {node_budget} nodes")
            lo, hi = list(lower), list(upper)
            if side == "down":
                hi[var] = math.floor(value)
            else:
                lo[var] = math.ceil(value)
            nodes += 1
            consider(solve_lp(model, lo, hi), lo, hi)

    if incumbent is None:
        return ModelSolution(Status.INFEASIBLE, names=root.names, nodes=nodes)
    incumbent = ModelSolution(
        Status.OPTIMAL, incumbent.values, incumbent.objective, incumbent.names, nodes
    )
    return _polish(model, incumbent)


def _prefix_sums(values) -> list[int]:
    out = [0]
    for v in values:
        out.append(out[-1] + v)
    return out


def solve_lattice(model: LinearModel, partition, budget: int = DEFAULT_LATTICE_BUDGET) -> ModelSolution:
    """Scan all tardy-count vectors ``y`` of ``partition``'s classes."""
    classes = partition.classes
    kind = partition.kind
    points = math.prod(c.size + 1 for c in classes)
    if points > budget:
        raise BudgetExceeded(f"lattice has {points} points, budget is {budget}")
    sizes = [c.size for c in classes]
    k = len(classes)
    prefix = [_prefix_sums(c.values) for c in classes]
    levels = partition.due_levels

    def completion(y) -> tuple[list, Fraction] | None:
        x = [n - t for n, t in zip(sizes, y)]
        if kind is ClassKind.DUE_PROC:
            load = 0
            for c, xi in zip(classes, x):
                load += c.p * xi
                if load > c.d:
                    return None
            z = [prefix[i][y[i]] for i in range(k)]
            return x + list(y) + z, sum(z)
        if kind is ClassKind.DUE_WEIGHT:
            z = [prefix[i][x[i]] for i in range(k)]
            load = 0
            for c, zi in zip(classes, z):
                load += zi
                if load > c.d:
                    return None
            return x + list(y) + z, sum(c.w * t for c, t in zip(classes, y))
        rows = [saturate_latest(partition.delta[i], x[i])[1] for i in range(k)]
        load = 0
        for l, d in enumerate(levels):
            load += sum(classes[i].p * rows[i][l] for i in range(k))
            if load > d:
                return None
        return [v for row in rows for v in row] + list(y), sum(c.w * t for c, t in zip(classes, y))

    best = None
    for y in itertools.product(*(range(n + 1) for n in sizes)):
        found = completion(y)
        if found is not None and (best is None or found[1] < best[1]):
            best = found
    names = tuple(v.name for v in model.vars)
    # all-tardy is always feasible, so best is set
    values = tuple(Fraction(v) for v in best[0])
    broken = model.violations(values)
    if broken:
        raise FormulationBug(f"lattice point violates model rows {broken}")
    return ModelSolution(Status.OPTIMAL, values, model.evaluate(values), names, points)


def solve_fpt(instance: Instance, kind: ClassKind | str, engine: str = "mip") -> OptimalSolution:
    """Partition, build the class formulation, solve it, decode the schedule."""
    kind = ClassKind(kind)
    if engine not in ENGINES:
        raise ValueError(f"engine must be one of {ENGINES}, got {engine!r}")
    partition = partition_classes(instance, kind)
    model = build_model(partition, relax_x=True)
    if engine == "mip":
        solution = solve_mip(model)
    else:
        solution = solve_lattice(model, partition)
    if solution.status is not Status.OPTIMAL:
        raise FormulationBug(f"{kind.value} model reported {solution.status.value}")
    source = solution
    if kind is ClassKind.PROC_WEIGHT:
        source = round_pw_solution(partition, model, solution)
    early = extract_schedule(instance, partition, source)
    return finish(instance, early, ALGORITHM_NAMES[kind], int(solution.objective))
