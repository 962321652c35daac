"""Persistent Braun heap.

Nodes are immutable tuples ``(rank_key, job, left, right)``. A Braun tree
keeps ``size(left) - size(right)`` in ``{0, 1}`` at every node, so its
depth is ``floor(lg n)`` and push, pop and replace-top each copy a single
root-to-leaf path. A heap value can therefore be shared by any number of
DP states, and "copying" it costs nothing. ``rank_key`` is the stored key
for a min-heap and its negation for a max-heap, so the same code serves
both orderings. Equal keys are broken by job id.

The module-level ``node_*`` functions work on bare nodes and are what the
dynamic programs call in their inner loops; :class:`PersistentHeap` wraps
them with size and key-sum bookkeeping for everything else.
"""

from __future__ import annotations

from collections.abc import Iterator

Node = tuple  # (rank_key, job, left, right) or None for the empty heap


def node_push(root, key: int, job: int):
    if root is None:
        return (key, job, None, None)
    top_key, top_job, left, right = root
    # the new element goes down the right side, which then becomes the left
    if key < top_key or (key == top_key and job < top_job):
        return (key, job, node_push(right, top_key, top_job), left)
    return (top_key, top_job, node_push(right, key, job), left)


def node_replace_top(root, key: int, job: int):
    """Swap the root element for ``(key, job)`` and sift it down."""
    _, _, left, right = root
    if left is None:
        return (key, job, None, None)
    child = left
    if right is not None and (right[0] < left[0] or (right[0] == left[0] and right[1] < left[1])):
        child = right
    if key < child[0] or (key == child[0] and job < child[1]):
        return (key, job, left, right)
    if child is left:
        return (left[0], left[1], node_replace_top(left, key, job), right)
    return (right[0], right[1], left, node_replace_top(right, key, job))


def _extract_leaf(root):
    """Remove one element from the deepest left path; returns ``(key, job, rest)``."""
    key, job, left, right = root
    if left is None:
        return key, job, None
    leaf_key, leaf_job, rest = _extract_leaf(left)
    return leaf_key, leaf_job, (key, job, right, rest)


def node_pop(root):
    leaf_key, leaf_job, rest = _extract_leaf(root)
    if rest is None:
        return None
    return node_replace_top(rest, leaf_key, leaf_job)


def node_items(root) -> Iterator[tuple[int, int]]:
    stack = [root]
    while stack:
        node = stack.pop()
        if node is None:
            continue
        yield node[0], node[1]
        stack.append(node[2])
        stack.append(node[3])


class PersistentHeap:
    """Immutable priority queue of ``(key, job)`` pairs.

    ``push``, ``pop`` and ``replace_top`` return new heaps and leave the
    receiver untouched. ``snapshot`` is O(1).
    """

    __slots__ = ("_root", "_size", "_total", "_sign")

    def __init__(self, ordering: str = "min", _root=None, _size: int = 0, _total: int = 0):
        if ordering not in ("min", "max"):
            raise ValueError(f"ordering must be 'min' or 'max', got {ordering!r}")
        self._sign = 1 if ordering == "min" else -1
        self._root = _root
        self._size = _size
        self._total = _total

    @property
    def ordering(self) -> str:
        return "min" if self._sign == 1 else "max"

    def _wrap(self, root, size: int, total: int) -> PersistentHeap:
        return PersistentHeap(self.ordering, root, size, total)

    def __len__(self) -> int:
        return self._size

    def __bool__(self) -> bool:
        return self._size > 0

    @property
    def total(self) -> int:
        """Sum of all keys."""
        return self._total

    def peek(self) -> tuple[int, int]:
        """``(key, job)`` of the extremum."""
        if self._root is None:
            raise IndexError("peek from an empty heap")
        return self._sign * self._root[0], self._root[1]

    def push(self, key: int, job: int) -> PersistentHeap:
        root = node_push(self._root, self._sign * key, job)
        return self._wrap(root, self._size + 1, self._total + key)

    def pop(self) -> tuple[tuple[int, int], PersistentHeap]:
        top = self.peek()
        rest = self._wrap(node_pop(self._root), self._size - 1, self._total - top[0])
        return top, rest

    def replace_top(self, key: int, job: int) -> PersistentHeap:
        """Drop the extremum and insert ``(key, job)`` in one step."""
        top_key, _ = self.peek()
        root = node_replace_top(self._root, self._sign * key, job)
        return self._wrap(root, self._size, self._total - top_key + key)

    def snapshot(self) -> PersistentHeap:
        return self

    def items(self) -> list[tuple[int, int]]:
        """All ``(key, job)`` pairs in extremum-first order."""
        return [(self._sign * k, j) for k, j in sorted(node_items(self._root))]

    @classmethod
    def from_root(cls, ordering: str, root) -> PersistentHeap:
        """Wrap a bare node tree produced by the ``node_*`` functions."""
        heap = cls(ordering)
        sign = heap._sign
        pairs = list(node_items(root))
        heap._root = root
        heap._size = len(pairs)
        heap._total = sum(sign * k for k, _ in pairs)
        return heap

    def __repr__(self) -> str:
        return f"PersistentHeap({self.ordering!r}, {self.items()!r})"
