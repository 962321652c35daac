"""Exact two-phase simplex over ``Fraction`` with Bland's rule.

Tableau rows are sparse dicts; the formulation matrices are mostly zeros
and rational arithmetic is the dominant cost. Variables are shifted so that
every column is non-negative: a finite lower bound becomes the origin, a
missing one splits the variable into a difference of two columns, and a
finite upper bound becomes an explicit row.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from .model import EQ, GE, LE, LinearModel, ModelSolution, Status

_ZERO = Fraction(0)


class _Tableau:
    def __init__(self, rows, rhs, basis, n_cols):
        self.rows: list[dict[int, Fraction]] = rows
        self.rhs: list[Fraction] = rhs
        self.basis: list[int] = basis
        self.n_cols = n_cols
        self.cost: dict[int, Fraction] = {}
        self.value = _ZERO

    def set_costs(self, costs: dict[int, Fraction]) -> None:
        """Install an objective and price out the current basis."""
        self.cost = {j: c for j, c in costs.items() if c}
        self.value = _ZERO
        for r, b in enumerate(self.basis):
            f = self.cost.get(b)
            if f:
                self._eliminate(self.cost, self.rows[r], f)
                self.value += f * self.rhs[r]

    @staticmethod
    def _eliminate(target: dict, row: dict, f) -> None:
        for j, a in row.items():
            v = target.get(j, _ZERO) - f * a
            if v:
                target[j] = v
            else:
                target.pop(j, None)

    def pivot(self, r: int, c: int) -> None:
        row = self.rows[r]
        piv = row[c]
        if piv != 1:
            row = {j: a / piv for j, a in row.items()}
            self.rows[r] = row
            self.rhs[r] /= piv
        b = self.rhs[r]
        for i, other in enumerate(self.rows):
            if i != r:
                f = other.get(c)
                if f:
                    self._eliminate(other, row, f)
                    self.rhs[i] -= f * b
        f = self.cost.get(c)
        if f:
            self._eliminate(self.cost, row, f)
            self.value += f * b
        self.basis[r] = c

    def run(self, eligible) -> bool:
        """Pivot to optimality; ``False`` when the objective is unbounded."""
        while True:
            entering = min((j for j, v in self.cost.items() if v < 0 and eligible(j)), default=None)
            if entering is None:
                return True
            leave, best = None, None
            for r, row in enumerate(self.rows):
                a = row.get(entering)
                if a is not None and a > 0:
                    ratio = self.rhs[r] / a
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and self.basis[r] < self.basis[leave])
                    ):
                        leave, best = r, ratio
            if leave is None:
                return False
            self.pivot(leave, entering)


def solve_lp(
    model: LinearModel,
    lower: Sequence | None = None,
    upper: Sequence | None = None,
) -> ModelSolution:
    """Continuous optimum of ``model``; integrality flags are ignored.

    ``lower``/``upper`` override the variable bounds (branch-and-bound
    passes tightened bounds this way).
    """
    names = tuple(v.name for v in model.vars)
    lower = [v.lower for v in model.vars] if lower is None else list(lower)
    upper = [v.upper for v in model.vars] if upper is None else list(upper)
    for lo, hi in zip(lower, upper):
        if lo is not None and hi is not None and lo > hi:
            return ModelSolution(Status.INFEASIBLE, names=names)

    # Column layout: one column per variable, plus a negative twin for free ones.
    columns: list[tuple[int, int]] = []
    for i, lo in enumerate(lower):
        columns.append((i, 1))
        if lo is None:
            columns.append((i, -1))
    n_struct = len(columns)

    raw_rows: list[tuple[dict[int, Fraction], str, Fraction]] = []
    for con in model.constraints:
        coeffs: dict[int, Fraction] = {}
        rhs = Fraction(con.rhs)
        for col, (i, sign) in enumerate(columns):
            a = con.coeffs[i]
            if a:
                coeffs[col] = Fraction(sign * a)
                if sign == 1 and lower[i] is not None:
                    rhs -= a * Fraction(lower[i])
        raw_rows.append((coeffs, con.sense, rhs))
    for col, (i, sign) in enumerate(columns):
        if sign == 1 and upper[i] is not None:
            if lower[i] is None:
                raw_rows.append(({col: Fraction(1), col + 1: Fraction(-1)}, LE, Fraction(upper[i])))
            else:
                raw_rows.append(({col: Fraction(1)}, LE, Fraction(upper[i]) - Fraction(lower[i])))

    rows, rhs, basis = [], [], []
    next_col = n_struct
    artificial_from = None
    pending_art: list[int] = []
    for coeffs, sense, b in raw_rows:
        if b < 0:
            coeffs = {j: -a for j, a in coeffs.items()}
            b = -b
            sense = {LE: GE, GE: LE, EQ: EQ}[sense]
        row = dict(coeffs)
        if sense == LE:
            row[next_col] = Fraction(1)
            basis.append(next_col)
            next_col += 1
        else:
            if sense == GE:
                row[next_col] = Fraction(-1)
                next_col += 1
            basis.append(None)
            pending_art.append(len(rows))
        rows.append(row)
        rhs.append(b)
    artificial_from = next_col
    for r in pending_art:
        rows[r][next_col] = Fraction(1)
        basis[r] = next_col
        next_col += 1

    tab = _Tableau(rows, rhs, basis, next_col)

    if pending_art:
        tab.set_costs({j: Fraction(1) for j in range(artificial_from, next_col)})
        tab.run(lambda j: j < artificial_from)
        if tab.value > 0:
            return ModelSolution(Status.INFEASIBLE, names=names)
        r = 0
        while r < len(tab.rows):
            if tab.basis[r] >= artificial_from:
                swap = min((j for j in tab.rows[r] if j < artificial_from), default=None)
                if swap is None:
                    # redundant row
                    del tab.rows[r], tab.rhs[r], tab.basis[r]
                    continue
                tab.pivot(r, swap)
            r += 1
        for row in tab.rows:
            for j in [j for j in row if j >= artificial_from]:
                del row[j]

    costs: dict[int, Fraction] = {}
    for col, (i, sign) in enumerate(columns):
        if model.objective[i]:
            costs[col] = Fraction(sign * model.objective[i])
    tab.set_costs(costs)
    if not tab.run(lambda j: j < artificial_from):
        return ModelSolution(Status.UNBOUNDED, names=names)

    col_value = [_ZERO] * n_struct
    for r, b in enumerate(tab.basis):
        if b < n_struct:
            col_value[b] = tab.rhs[r]
    values = [_ZERO] * len(model.vars)
    for col, (i, sign) in enumerate(columns):
        if sign == 1:
            base = Fraction(lower[i]) if lower[i] is not None else _ZERO
            values[i] += base + col_value[col]
        else:
            values[i] -= col_value[col]
    values = tuple(values)
    return ModelSolution(Status.OPTIMAL, values, model.evaluate(values), names)
