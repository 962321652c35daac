import pytest
from hypothesis import given, settings

from conftest import feasible_subsets, instances
from tardy import (
    ClassKind,
    EmptyInstance,
    Instance,
    InstanceOverflow,
    InvalidInstance,
    Job,
    edd_order,
    evaluate_early_set,
    partition_classes,
    stats,
    total_weight,
)
from tardy.core import INT_LIMIT


def inst(*rows):
    return Instance.from_tuples(rows)


class TestJobAndInstance:
    def test_negative_values_rejected(self):
        with pytest.raises(InvalidInstance):
            Job(0, -1, 0, 0)

    def test_bool_is_not_an_integer(self):
        with pytest.raises(InvalidInstance):
            Job(0, True, 1, 1)

    def test_ids_must_be_consecutive(self):
        with pytest.raises(InvalidInstance):
            Instance((Job(1, 1, 1, 1),))

    def test_sum_overflow_detected(self):
        big = INT_LIMIT // 2
        with pytest.raises(InstanceOverflow):
            inst((big, 1, 1), (big, 1, 1))

    def test_without_renumbers(self):
        smaller = inst((1, 2, 3), (4, 5, 6), (7, 8, 9)).without(1)
        assert [(j.id, j.p) for j in smaller.jobs] == [(0, 1), (1, 7)]


class TestEddOrder:
    def test_sorted_by_due_date(self):
        assert edd_order(inst((1, 3, 1), (1, 1, 1), (1, 2, 1))) == [1, 2, 0]

    def test_ties_by_id(self):
        assert edd_order(inst((3, 5, 1), (2, 5, 1), (1, 5, 1))) == [0, 1, 2]

    def test_empty(self):
        assert edd_order(Instance(())) == []


class TestEvaluateEarlySet:
    def test_feasible_example(self, three_jobs):
        res = evaluate_early_set(three_jobs, {0, 2})
        assert res is not None
        assert res.objective == 1
        assert res.order == (0, 2, 1)
        assert res.completion == (2, 5, 3)

    def test_infeasible_example(self, three_jobs):
        assert evaluate_early_set(three_jobs, {0, 1}) is None

    def test_empty_set_costs_all_weight(self, three_jobs):
        assert evaluate_early_set(three_jobs, set()).objective == 6

    def test_unknown_id(self, three_jobs):
        with pytest.raises(InvalidInstance):
            evaluate_early_set(three_jobs, {7})

    def test_zero_due_date_only_at_time_zero(self):
        instance = inst((0, 0, 5), (1, 0, 5))
        assert evaluate_early_set(instance, {0}).objective == 5
        assert evaluate_early_set(instance, {1}) is None

    @settings(max_examples=60, deadline=None)
    @given(instances(max_n=6))
    def test_feasible_iff_edd_replay(self, instance):
        feasible = set(feasible_subsets(instance))
        for mask in range(1 << instance.n):
            early = frozenset(i for i in range(instance.n) if mask >> i & 1)
            res = evaluate_early_set(instance, early)
            assert (res is not None) == (early in feasible)
            if res is not None:
                tardy = sum(j.w for j in instance.jobs if j.id not in early)
                assert res.objective == tardy
                for i in early:
                    assert res.completion[i] <= instance.jobs[i].d

    @settings(max_examples=60, deadline=None)
    @given(instances(max_n=6))
    def test_swapping_identical_jobs_is_neutral(self, instance):
        for early in feasible_subsets(instance):
            for a in early:
                for b in range(instance.n):
                    ja, jb = instance.jobs[a], instance.jobs[b]
                    if b in early or (ja.d, ja.p) != (jb.d, jb.p):
                        continue
                    swapped = evaluate_early_set(instance, (early - {a}) | {b})
                    assert swapped is not None
                    base = evaluate_early_set(instance, early).objective
                    assert swapped.objective - base == ja.w - jb.w


class TestPartition:
    JOBS = ((1, 4, 7), (1, 4, 9), (2, 4, 7))

    def test_due_proc(self):
        part = partition_classes(inst(*self.JOBS), ClassKind.DUE_PROC)
        assert [c.members for c in part.classes] == [(0, 1), (2,)]
        assert [c.values for c in part.classes] == [(7, 9), (7,)]

    def test_proc_weight(self):
        part = partition_classes(inst(*self.JOBS), "proc+weight")
        assert part.k == 3
        assert part.due_levels == (4,)
        assert part.delta == ((1,), (1,), (1,))

    def test_due_weight(self):
        part = partition_classes(inst(*self.JOBS), ClassKind.DUE_WEIGHT)
        assert [c.members for c in part.classes] == [(0, 2), (1,)]
        assert [c.values for c in part.classes] == [(1, 2), (1,)]

    @settings(max_examples=80, deadline=None)
    @given(instances(max_n=10))
    def test_invariants(self, instance):
        for kind in ClassKind:
            part = partition_classes(instance, kind)
            assert sum(c.size for c in part.classes) == instance.n
            assert sorted(m for c in part.classes for m in c.members) == list(range(instance.n))
            for c in part.classes:
                assert list(c.values) == sorted(c.values)
            if kind is not ClassKind.PROC_WEIGHT:
                dues = [c.d for c in part.classes]
                assert dues == sorted(dues)
            else:
                for c, row in zip(part.classes, part.delta):
                    assert sum(row) == c.size


class TestStats:
    def test_counts(self):
        instance = inst((1, 4, 7), (1, 4, 9), (2, 4, 7))
        s = stats(instance)
        assert (s.nu_d, s.nu_p, s.nu_w) == (1, 2, 2)

    def test_single_job(self):
        s = stats(inst((3, 3, 3)))
        assert (s.nu_d, s.nu_p, s.nu_w) == (1, 1, 1)

    def test_all_distinct(self):
        s = stats(inst((1, 2, 3), (4, 5, 6), (7, 8, 9)))
        assert (s.nu_d, s.nu_p, s.nu_w) == (3, 3, 3)

    def test_empty(self):
        with pytest.raises(EmptyInstance):
            stats(Instance(()))


def test_total_weight():
    assert total_weight(inst((1, 1, 3), (1, 1, 1), (1, 1, 2))) == 6
    assert total_weight(Instance(())) == 0
    assert total_weight(inst((1, 1, 0), (1, 1, 0))) == 0
