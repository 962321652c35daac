import pytest
from hypothesis import given, strategies as st

from tardy import PersistentHeap

ops = st.lists(
    st.one_of(
        st.tuples(st.just("push"), st.integers(-50, 50)),
        st.tuples(st.just("pop"), st.just(0)),
        st.tuples(st.just("replace"), st.integers(-50, 50)),
    ),
    max_size=60,
)


def test_empty_heap():
    h = PersistentHeap("max")
    assert len(h) == 0 and not h and h.total == 0
    with pytest.raises(IndexError):
        h.peek()
    with pytest.raises(IndexError):
        h.pop()


def test_bad_ordering():
    with pytest.raises(ValueError):
        PersistentHeap("middle")


def test_snapshot_independence():
    base = PersistentHeap("min").push(5, 0).push(2, 1)
    snap = base.snapshot()
    grown = base.push(1, 2)
    _, shrunk = base.pop()
    assert snap.items() == [(2, 1), (5, 0)]
    assert grown.peek() == (1, 2)
    assert shrunk.items() == [(5, 0)]


def test_max_ordering_and_ties():
    h = PersistentHeap("max").push(3, 4).push(7, 2).push(7, 1)
    assert h.peek() == (7, 1)
    assert h.replace_top(0, 9).items() == [(7, 2), (3, 4), (0, 9)]


@pytest.mark.parametrize("ordering", ["min", "max"])
@given(ops=ops)
def test_matches_sorted_list_model(ordering, ops):
    sign = 1 if ordering == "min" else -1
    heap = PersistentHeap(ordering)
    model: list[tuple[int, int]] = []
    history = []
    for job, (op, key) in enumerate(ops):
        history.append((heap, sorted(model)))
        if op == "push":
            heap = heap.push(key, job)
            model.append((sign * key, job))
        elif model:
            model.sort()
            if op == "pop":
                top, heap = heap.pop()
                assert top == (sign * model[0][0], model[0][1])
                model.pop(0)
            else:
                heap = heap.replace_top(key, job)
                model[0] = (sign * key, job)
        assert len(heap) == len(model)
        assert heap.total == sum(sign * k for k, _ in model)
        if model:
            k, j = min(model)
            assert heap.peek() == (sign * k, j)
    # earlier handles are untouched by later updates
    for old, contents in history:
        assert old.items() == [(sign * k, j) for k, j in contents]


def _braun_size(node):
    if node is None:
        return 0
    left, right = _braun_size(node[2]), _braun_size(node[3])
    assert left - right in (0, 1)
    for child in (node[2], node[3]):
        if child is not None:
            assert (child[0], child[1]) >= (node[0], node[1])
    return 1 + left + right


@given(ops=ops)
def test_shape_stays_balanced(ops):
    heap = PersistentHeap("max")
    for job, (op, key) in enumerate(ops):
        if op == "push":
            heap = heap.push(key, job)
        elif heap:
            heap = heap.pop()[1] if op == "pop" else heap.replace_top(key, job)
        assert _braun_size(heap._root) == len(heap)
