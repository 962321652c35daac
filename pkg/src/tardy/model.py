"""Linear models for the class-based formulations and their decoding.

Three formulations are built from a :class:`~tardy.core.ClassPartition`:

* ``build_dp_model`` -- classes of equal (due date, processing time).
  ``x_i``/``y_i`` count early/tardy members, ``z_i`` is the tardy weight
  of class ``i``, bounded below by one linear cut per member so that its
  least value is the sum of the ``y_i`` smallest weights.
* ``build_dw_model`` -- classes of equal (due date, weight). ``z_i`` is
  the early processing time, bounded below by the sum of the ``x_i``
  shortest members.
* ``build_pw_model`` -- classes of equal (processing time, weight) with
  ``x_{i,l}`` early members per due level ``l``. With ``relax_x`` the
  per-level counts are continuous and :func:`round_pw_solution` turns an
  optimum back into an integral one of equal cost.

All numbers are exact (``int`` or ``Fraction``).
"""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .core import ClassKind, ClassPartition, Instance, evaluate_early_set
from .errors import FormulationBug

LE, EQ, GE = "<=", "=", ">="


@dataclass(frozen=True)
class Variable:
    name: str
    integral: bool
    lower: Fraction | int | None = 0
    upper: Fraction | int | None = None

    def __post_init__(self) -> None:
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise ValueError(f"{self.name}: lower bound {self.lower} exceeds upper {self.upper}")


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple
    sense: str
    rhs: Fraction | int
    name: str = ""

    def __post_init__(self) -> None:
        if self.sense not in (LE, EQ, GE):
            raise ValueError(f"unknown relation {self.sense!r}")

    def activity(self, values: Sequence) -> Fraction:
        return sum((c * v for c, v in zip(self.coeffs, values) if c), Fraction(0))

    def satisfied(self, values: Sequence) -> bool:
        lhs = self.activity(values)
        if self.sense == LE:
            return lhs <= self.rhs
        if self.sense == GE:
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class LinearModel:
    """Minimise ``objective . x`` subject to ``constraints`` and variable bounds."""

    vars: tuple[Variable, ...]
    constraints: tuple[Constraint, ...]
    objective: tuple
    kind: ClassKind | None = None
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        width = len(self.vars)
        if len(self.objective) != width:
            raise ValueError("objective length differs from the number of variables")
        for con in self.constraints:
            if len(con.coeffs) != width:
                raise ValueError(f"constraint {con.name!r} has {len(con.coeffs)} coefficients, expected {width}")
        object.__setattr__(self, "_index", {v.name: i for i, v in enumerate(self.vars)})

    def index(self, name: str) -> int:
        return self._index[name]

    @property
    def integral_indices(self) -> list[int]:
        return [i for i, v in enumerate(self.vars) if v.integral]

    def evaluate(self, values: Sequence) -> Fraction:
        return sum((c * v for c, v in zip(self.objective, values) if c), Fraction(0))

    def violations(self, values: Sequence, check_integrality: bool = True) -> list[str]:
        """Names of every bound, integrality or row condition ``values`` breaks."""
        bad = []
        for var, value in zip(self.vars, values):
            if var.lower is not None and value < var.lower:
                bad.append(f"{var.name} >= {var.lower}")
            if var.upper is not None and value > var.upper:
                bad.append(f"{var.name} <= {var.upper}")
            if check_integrality and var.integral and Fraction(value).denominator != 1:
                bad.append(f"{var.name} integral")
        bad.extend(con.name for con in self.constraints if not con.satisfied(values))
        return bad

    def to_lp(self) -> str:
        """Render in CPLEX LP text format."""
        names = [v.name for v in self.vars]

        def expr(coeffs) -> str:
            terms = []
            for c, name in zip(coeffs, names):
                if c == 0:
                    continue
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                body = name if mag == 1 else f"{_number(mag)} {name}"
                terms.append(f"{sign} {body}")
            if not terms:
                return "0"
            text = " ".join(terms)
            return text[2:] if text.startswith("+ ") else text

        lines = ["Minimize", f" obj: {expr(self.objective)}", "Subject To"]
        for i, con in enumerate(self.constraints):
            label = con.name or f"c{i + 1}"
            lines.append(f" {label}: {expr(con.coeffs)} {con.sense} {_number(con.rhs)}")
        lines.append("Bounds")
        for v in self.vars:
            lo = "-inf" if v.lower is None else _number(v.lower)
            hi = "+inf" if v.upper is None else _number(v.upper)
            lines.append(f" {lo} <= {v.name} <= {hi}")
        general = [v.name for v in self.vars if v.integral]
        if general:
            lines.append("General")
            lines.append(" " + " ".join(general))
        lines.append("End")
        return "\n".join(lines) + "\n"


def _number(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return repr(float(value))


class Status(str, enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class ModelSolution:
    status: Status
    values: tuple[Fraction, ...] = ()
    objective: Fraction | None = None
    names: tuple[str, ...] = ()
    nodes: int = 0

    def __getitem__(self, name: str) -> Fraction:
        return self.values[self.names.index(name)]

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.names, self.values))


@dataclass(frozen=True)
class RoundingTrace:
    """Integral per-due-level early counts recovered from a relaxed optimum.

    ``pivots[i]`` is the 1-based due level at which class ``i`` is only
    partly filled (``n_d`` when the class has no early job).
    """

    pivots: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]
    early_counts: tuple[int, ...]
    tardy: tuple[int, ...]
    objective: int


def _model(kind, variables, constraints, objective) -> LinearModel:
    width = len(variables)
    rows = []
    for name, terms, sense, rhs in constraints:
        coeffs = [0] * width
        for idx, c in terms:
            coeffs[idx] += c
        rows.append(Constraint(tuple(coeffs), sense, rhs, name))
    obj = [0] * width
    for idx, c in objective:
        obj[idx] += c
    return LinearModel(tuple(variables), tuple(rows), tuple(obj), kind)


def _require(partition: ClassPartition, kind: ClassKind) -> None:
    if partition.kind is not kind:
        raise ValueError(f"expected a {kind.value} partition, got {partition.kind.value}")


def _prefix_cuts(count_var: int, bound_var: int, sorted_values, label: str):
    """Rows ``bound >= (count - j + 1) * v_j + sum_{l<j} v_l`` for j = 1..n."""
    rows = []
    before = 0
    for j, v in enumerate(sorted_values, start=1):
        rows.append(
            (f"{label}_{j}", [(bound_var, 1), (count_var, -v)], GE, before - (j - 1) * v)
        )
        before += v
    return rows


def build_dp_model(partition: ClassPartition) -> LinearModel:
    _require(partition, ClassKind.DUE_PROC)
    classes = partition.classes
    k = len(classes)
    variables = (
        [Variable(f"x{i + 1}", True, 0, c.size) for i, c in enumerate(classes)]
        + [Variable(f"y{i + 1}", True, 0, c.size) for i, c in enumerate(classes)]
        + [Variable(f"z{i + 1}", False, 0, None) for i in range(k)]
    )
    x, y, z = 0, k, 2 * k
    rows = [(f"count{i + 1}", [(x + i, 1), (y + i, 1)], EQ, c.size) for i, c in enumerate(classes)]
    rows += [
        (f"due{i + 1}", [(x + j, classes[j].p) for j in range(i + 1)], LE, c.d)
        for i, c in enumerate(classes)
    ]
    for i in range(k):
        rows += _prefix_cuts(y + i, z + i, classes[i].values, f"tardyweight{i + 1}")
    return _model(ClassKind.DUE_PROC, variables, rows, [(z + i, 1) for i in range(k)])


def build_dw_model(partition: ClassPartition) -> LinearModel:
    _require(partition, ClassKind.DUE_WEIGHT)
    classes = partition.classes
    k = len(classes)
    variables = (
        [Variable(f"x{i + 1}", True, 0, c.size) for i, c in enumerate(classes)]
        + [Variable(f"y{i + 1}", True, 0, c.size) for i, c in enumerate(classes)]
        + [Variable(f"z{i + 1}", False, 0, None) for i in range(k)]
    )
    x, y, z = 0, k, 2 * k
    rows = [(f"count{i + 1}", [(x + i, 1), (y + i, 1)], EQ, c.size) for i, c in enumerate(classes)]
    rows += [
        (f"due{i + 1}", [(z + j, 1) for j in range(i + 1)], LE, c.d) for i, c in enumerate(classes)
    ]
    for i in range(k):
        rows += _prefix_cuts(x + i, z + i, classes[i].values, f"earlyproc{i + 1}")
    return _model(ClassKind.DUE_WEIGHT, variables, rows, [(y + i, c.w) for i, c in enumerate(classes)])


def build_pw_model(partition: ClassPartition, relax_x: bool = False) -> LinearModel:
    """Per-due-level formulation; ``relax_x`` makes the ``x_{i,l}`` continuous."""
    _require(partition, ClassKind.PROC_WEIGHT)
    classes = partition.classes
    levels = partition.due_levels
    k, nd = len(classes), len(levels)

    def xi(i: int, l: int) -> int:
        return i * nd + l

    variables = [
        Variable(f"x{i + 1}_{l + 1}", not relax_x, 0, None) for i in range(k) for l in range(nd)
    ] + [Variable(f"y{i + 1}", True, 0, c.size) for i, c in enumerate(classes)]
    y = k * nd
    rows = [
        (f"level{i + 1}_{l + 1}", [(xi(i, l), 1)], LE, partition.delta[i][l])
        for i in range(k)
        for l in range(nd)
    ]
    rows += [
        (f"count{i + 1}", [(xi(i, l), 1) for l in range(nd)] + [(y + i, 1)], EQ, c.size)
        for i, c in enumerate(classes)
    ]
    rows += [
        (
            f"due{l + 1}",
            [(xi(i, m), classes[i].p) for i in range(k) for m in range(l + 1)],
            LE,
            levels[l],
        )
        for l in range(nd)
    ]
    return _model(ClassKind.PROC_WEIGHT, variables, rows, [(y + i, c.w) for i, c in enumerate(classes)])


def build_model(partition: ClassPartition, relax_x: bool = True) -> LinearModel:
    if partition.kind is ClassKind.DUE_PROC:
        return build_dp_model(partition)
    if partition.kind is ClassKind.DUE_WEIGHT:
        return build_dw_model(partition)
    return build_pw_model(partition, relax_x)


def saturate_latest(delta_row: Sequence[int], early: int) -> tuple[int, tuple[int, ...]]:
    """Fill ``early`` jobs into due levels from the latest one backwards.

    Returns the 1-based pivot level and the filled row. The pivot is the
    level left partly filled; a fully saturated class reports level 1 and an
    empty one reports ``len(delta_row)``.
    """
    nd = len(delta_row)
    if early < 0 or early > sum(delta_row):
        raise FormulationBug(f"cannot place {early} early jobs into levels {tuple(delta_row)}")
    if early == 0:
        return nd, (0,) * nd
    row = [0] * nd
    later = 0  # sum of delta over levels after the current one
    for l in range(nd - 1, -1, -1):
        if later + delta_row[l] > early:
            row[l] = early - later
            return l + 1, tuple(row)
        row[l] = delta_row[l]
        later += delta_row[l]
    return 1, tuple(row)


def round_pw_solution(
    partition: ClassPartition, model: LinearModel, solution: ModelSolution
) -> RoundingTrace:
    """Integral per-level counts with the same tardy counts as ``solution``.

    The relaxed optimum only pins down how many members of each class are
    early; placing them at the latest due levels minimises every prefix of
    early processing, so all due-level rows stay satisfied.
    """
    _require(partition, ClassKind.PROC_WEIGHT)
    if solution.status is not Status.OPTIMAL:
        raise ValueError(f"cannot round a {solution.status.value} solution")
    classes = partition.classes
    nd = len(partition.due_levels)
    values = solution.values
    pivots, rows, early, tardy = [], [], [], []
    for i, c in enumerate(classes):
        x_star = sum(values[i * nd + l] for l in range(nd))
        y_star = values[model.index(f"y{i + 1}")]
        if Fraction(x_star).denominator != 1 or Fraction(y_star).denominator != 1:
            raise FormulationBug(f"class {i + 1}: non-integral early count {x_star}")
        pivot, row = saturate_latest(partition.delta[i], int(x_star))
        pivots.append(pivot)
        rows.append(row)
        early.append(int(x_star))
        tardy.append(int(y_star))

    rounded = [v for row in rows for v in row] + tardy
    broken = model.violations(rounded)
    if broken:
        raise FormulationBug(f"rounded solution violates {broken}")
    objective = model.evaluate(rounded)
    if objective != solution.objective:
        raise FormulationBug(f"rounding changed the objective {solution.objective} -> {objective}")
    return RoundingTrace(tuple(pivots), tuple(rows), tuple(early), tuple(tardy), int(objective))


def extract_schedule(
    instance: Instance, partition: ClassPartition, source: ModelSolution | RoundingTrace
) -> frozenset[int]:
    """Concrete early set encoded by a model solution (or rounding trace).

    Raises :class:`FormulationBug` unless the set is feasible and its
    tardy weight equals the objective of ``source``.
    """
    early: list[int] = []
    kind = partition.kind
    if kind is ClassKind.PROC_WEIGHT:
        if not isinstance(source, RoundingTrace):
            raise TypeError("proc+weight schedules are extracted from a RoundingTrace")
        for c, row in zip(partition.classes, source.rows):
            for level, count in zip(partition.due_levels, row):
                at_level = [m for m, d in zip(c.members, c.values) if d == level]
                early.extend(at_level[:count])
        objective = source.objective
    else:
        for i, c in enumerate(partition.classes):
            if kind is ClassKind.DUE_PROC:
                tardy = _as_int(source[f"y{i + 1}"])
                early.extend(c.members[tardy:])
            else:
                early.extend(c.members[: _as_int(source[f"x{i + 1}"])])
        objective = source.objective

    result = evaluate_early_set(instance, early)
    if result is None:
        raise FormulationBug(f"{kind.value}: decoded early set {sorted(early)} is infeasible")
    if result.objective != objective:
        raise FormulationBug(
            f"{kind.value}: model objective {objective} but schedule gives {result.objective}"
        )
    return result.early


def _as_int(value) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise FormulationBug(f"expected an integral value, got {value}")
    return value.numerator
