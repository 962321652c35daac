from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import Bounds, LinearConstraint, linprog, milp

from conftest import instances
from tardy import (
    BudgetExceeded,
    ClassKind,
    Instance,
    LinearModel,
    Status,
    partition_classes,
    solve_bruteforce,
    solve_fpt,
    solve_lattice,
    solve_lp,
    solve_mip,
)
from tardy.model import EQ, GE, LE, Constraint, Variable, build_model, build_pw_model


def lp(variables, constraints, objective):
    return LinearModel(tuple(variables), tuple(constraints), tuple(objective))


class TestSolveLp:
    def test_lower_bound_binds(self):
        model = lp([Variable("x", False, 0, 10)], [Constraint((1,), GE, 3)], [1])
        sol = solve_lp(model)
        assert sol.status is Status.OPTIMAL
        assert sol["x"] == 3 and sol.objective == 3

    def test_unbounded(self):
        assert solve_lp(lp([Variable("x", False)], [], [-1])).status is Status.UNBOUNDED

    def test_infeasible(self):
        half = Fraction(1, 2)
        model = lp(
            [Variable("x", False, 0, half), Variable("y", False, 0, half)],
            [Constraint((1, 1), GE, 2)],
            [1, 1],
        )
        assert solve_lp(model).status is Status.INFEASIBLE

    def test_free_variable_and_equality(self):
        model = lp(
            [Variable("x", False, None, None), Variable("y", False, 0, None)],
            [Constraint((1, 1), EQ, -4), Constraint((0, 1), LE, 3)],
            [0, 1],
        )
        sol = solve_lp(model)
        assert (sol["x"], sol["y"], sol.objective) == (-4, 0, 0)

    def test_exact_fractions(self):
        model = lp(
            [Variable("x", False), Variable("y", False)],
            [Constraint((3, 1), GE, 2), Constraint((1, 3), GE, 2)],
            [1, 1],
        )
        sol = solve_lp(model)
        assert sol.values == (Fraction(1, 2), Fraction(1, 2))

    def test_degenerate_cycling_example(self):
        # Beale's cycling LP; optimum -5/4 confirmed with scipy HiGHS
        model = lp(
            [Variable(f"x{i}", False) for i in range(4)],
            [
                Constraint((Fraction(1, 4), -8, -1, 9), LE, 0),
                Constraint((Fraction(1, 2), -12, Fraction(-1, 2), 3), LE, 0),
                Constraint((0, 0, 1, 0), LE, 1),
            ],
            [Fraction(-3, 4), 20, Fraction(-1, 2), 6],
        )
        assert solve_lp(model).objective == Fraction(-5, 4)


small_int = st.integers(-5, 5)


@st.composite
def random_models(draw, integral: bool):
    n = draw(st.integers(1, 4))
    m = draw(st.integers(0, 4))
    variables = [
        Variable(f"v{i}", integral and draw(st.booleans()), 0, draw(st.integers(1, 6)))
        for i in range(n)
    ]
    rows = [
        Constraint(
            tuple(draw(small_int) for _ in range(n)),
            draw(st.sampled_from([LE, GE, EQ])),
            draw(st.integers(-6, 12)),
            f"r{r}",
        )
        for r in range(m)
    ]
    return lp(variables, rows, [draw(small_int) for _ in range(n)])


def scipy_parts(model):
    a = np.array([c.coeffs for c in model.constraints], dtype=float).reshape(-1, len(model.vars))
    lo = np.array([-np.inf if c.sense == LE else float(c.rhs) for c in model.constraints])
    hi = np.array([np.inf if c.sense == GE else float(c.rhs) for c in model.constraints])
    bounds = Bounds([float(v.lower) for v in model.vars], [float(v.upper) for v in model.vars])
    return a, lo, hi, bounds


@settings(max_examples=150, deadline=None)
@given(random_models(integral=False))
def test_lp_matches_scipy(model):
    a, lo, hi, bounds = scipy_parts(model)
    rows = [LinearConstraint(a, lo, hi)] if len(model.constraints) else []
    ref = milp(np.array(model.objective, dtype=float), constraints=rows, bounds=bounds)
    sol = solve_lp(model)
    if ref.status == 2:
        assert sol.status is Status.INFEASIBLE
    else:
        assert ref.status == 0
        assert sol.status is Status.OPTIMAL
        assert float(sol.objective) == pytest.approx(ref.fun, abs=1e-7)
        assert model.violations(sol.values, check_integrality=False) == []


@settings(max_examples=150, deadline=None)
@given(random_models(integral=True))
def test_mip_matches_scipy(model):
    a, lo, hi, bounds = scipy_parts(model)
    rows = [LinearConstraint(a, lo, hi)] if len(model.constraints) else []
    flags = np.array([1 if v.integral else 0 for v in model.vars])
    ref = milp(np.array(model.objective, dtype=float), constraints=rows, bounds=bounds, integrality=flags)
    sol = solve_mip(model)
    if ref.status == 2:
        assert sol.status is Status.INFEASIBLE
    else:
        assert sol.status is Status.OPTIMAL
        assert float(sol.objective) == pytest.approx(ref.fun, abs=1e-7)
        assert model.violations(sol.values) == []
        relaxed = solve_lp(model)
        assert relaxed.objective <= sol.objective


def test_linprog_agrees_on_unbounded():
    model = lp([Variable("x", False), Variable("y", False)], [Constraint((1, -1), LE, 1)], [-1, 0])
    assert linprog([-1, 0], A_ub=[[1, -1]], b_ub=[1]).status == 3
    assert solve_lp(model).status is Status.UNBOUNDED


class TestSolveMip:
    def test_small_example(self):
        model = lp(
            [Variable("x", True, 0, 2), Variable("y", True, 0, 2)],
            [Constraint((1, 1), EQ, 2), Constraint((3, 0), LE, 3)],
            [0, 1],
        )
        sol = solve_mip(model)
        assert sol["y"] == 1 and sol.objective == 1

    def test_continuous_model_is_plain_lp(self):
        model = lp(
            [Variable("x", False), Variable("y", False)],
            [Constraint((3, 1), GE, 2), Constraint((1, 3), GE, 2)],
            [1, 1],
        )
        assert solve_mip(model) == solve_lp(model)

    def test_integral_pw_model(self, three_jobs):
        part = partition_classes(three_jobs, ClassKind.PROC_WEIGHT)
        assert solve_mip(build_pw_model(part, relax_x=False)).objective == 1

    def test_node_budget(self):
        # no integer point in a thin slab forces deep branching
        model = lp(
            [Variable("x", True, 0, 100), Variable("y", True, 0, 100)],
            [Constraint((2, 2), EQ, 101)],
            [1, 0],
        )
        with pytest.raises(BudgetExceeded):
            solve_mip(model, node_budget=3)
        assert solve_mip(model).status is Status.INFEASIBLE


class TestSolveLattice:
    def test_scan_size(self):
        instance = Instance.from_tuples([(2, 5, 3)] * 4)
        part = partition_classes(instance, ClassKind.DUE_PROC)
        sol = solve_lattice(build_model(part), part)
        assert sol.nodes == 5
        assert sol.objective == 6

    def test_pw_example(self, three_jobs):
        part = partition_classes(three_jobs, ClassKind.PROC_WEIGHT)
        assert solve_lattice(build_model(part), part).objective == 1

    def test_hopeless_due_dates_still_feasible(self):
        instance = Instance.from_tuples([(9, 1, 2), (9, 2, 3)])
        for kind in ClassKind:
            part = partition_classes(instance, kind)
            sol = solve_lattice(build_model(part), part)
            assert sol.status is Status.OPTIMAL and sol.objective == 5

    def test_budget(self):
        instance = Instance.from_tuples([(1, 5, w) for w in range(1, 6)])
        part = partition_classes(instance, ClassKind.DUE_WEIGHT)
        with pytest.raises(BudgetExceeded):
            solve_lattice(build_model(part), part, budget=10)


class TestSolveFpt:
    @pytest.mark.parametrize("kind", list(ClassKind))
    @pytest.mark.parametrize("engine", ["mip", "lattice"])
    def test_three_jobs(self, three_jobs, kind, engine):
        sol = solve_fpt(three_jobs, kind, engine)
        assert sol.objective == 1

    @pytest.mark.parametrize("kind", list(ClassKind))
    def test_empty(self, kind):
        assert solve_fpt(Instance(()), kind).objective == 0

    def test_bad_engine(self, three_jobs):
        with pytest.raises(ValueError):
            solve_fpt(three_jobs, ClassKind.DUE_PROC, "cplex")


@settings(max_examples=60, deadline=None)
@given(instances(max_n=9))
def test_engines_agree_and_bound(instance):
    for kind in ClassKind:
        part = partition_classes(instance, kind)
        model = build_model(part)
        mip = solve_mip(model)
        assert solve_lattice(model, part).objective == mip.objective
        assert solve_lp(model).objective <= mip.objective
    part = partition_classes(instance, ClassKind.PROC_WEIGHT)
    relaxed = solve_mip(build_pw_model(part, relax_x=True))
    assert relaxed.objective == solve_mip(build_pw_model(part, relax_x=False)).objective


@settings(max_examples=60, deadline=None)
@given(instances(max_n=9))
def test_fpt_matches_oracle(instance):
    expected = solve_bruteforce(instance).objective
    for kind in ClassKind:
        for engine in ("mip", "lattice"):
            assert solve_fpt(instance, kind, engine).objective == expected


def test_deterministic_witnesses():
    instance = Instance.from_tuples([(2, 4, 3), (2, 4, 3), (1, 3, 2), (3, 7, 5), (2, 7, 1)])
    for kind in ClassKind:
        model = build_model(partition_classes(instance, kind))
        assert solve_mip(model) == solve_mip(model)
        assert solve_lp(model) == solve_lp(model)
