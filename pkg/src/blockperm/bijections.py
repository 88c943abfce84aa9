"""
Structure-preserving maps between sets of block-ascending permutations.

Everything here is built from one elementary move on a two-block window
with LIS length h: the forward move takes the element y_{h-j} of the
second block (j the largest ridge index) and inserts it after x_j in the
first block, mapping the exact-LIS-h sets (p, q) -> (p+1, q-1); the
reverse move uses the smallest ridge index and sends x_j back.  The two
moves are mutually inverse and preserve the LIS length of every value
interval, which is what lets them act on a window inside a longer
permutation without disturbing the global LIS.

Iterating the move |a_{l+1} - a_l| times swaps two adjacent block lengths
(a bijection); composing adjacent swaps reorders a whole composition; a
single move with a_{l+1} >= a_l + 2 is the unit step of the majorization
injection.  Independent of the window machinery, deleting or inserting
the maximum element at the end of a full first block is the elementary
bijection that changes a block length from k+1 to k.

Applying a map at block index l records, when a trace is supplied, one
step per elementary move with before/after snapshots of the whole
permutation, so composite maps stay explainable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .core import (
    BlockPermutation,
    Composition,
    DomainError,
    TwoBlockView,
    as_composition,
    lis_length,
)


@dataclass(frozen=True)
class RidgePair:
    """The smallest (nu) and largest (omega) ridge index for a window of LIS h.

    A ridge index j splits a maximal increasing subsequence into the
    prefix x_1 < ... < x_j of the first block followed by the top chain
    y_{h-j} < ... < y_1 of the second; j = 0 means the x-chain is empty,
    j = h means the y-chain is.
    """

    nu: int
    omega: int
    h: int


def _ridge(first: Sequence[int], second: Sequence[int], h: int) -> tuple[int, int]:
    # Assumes lis_length(first + second) == h; callers validate.
    p, q = len(first), len(second)
    lo, hi = max(0, h - q), min(p, h)
    valid = [
        j
        for j in range(lo, hi + 1)
        if j == 0 or j == h or first[j - 1] < second[q - (h - j)]
    ]
    if not valid:
        raise AssertionError(
            f"no ridge index for {first}|{second} at h={h}"
        )
    return valid[0], valid[-1]


def ridge_indices(view: TwoBlockView, h: int) -> RidgePair:
    """Compute the ridge pair of ``view``, rejecting a mismatched ``h``."""
    actual = lis_length(view)
    if actual != h:
        raise DomainError(
            f"longest increasing subsequence has length {actual}, not {h}"
        )
    nu, omega = _ridge(view.first, view.second, h)
    return RidgePair(nu, omega, h)


def _w_step(first: tuple[int, ...], second: tuple[int, ...], h: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # One forward move; assumes len(first) < h <= len(first)+len(second).
    _, j = _ridge(first, second, h)
    idx = len(second) - (h - j)
    moved = second[idx]
    return first[:j] + (moved,) + first[j:], second[:idx] + second[idx + 1:]


def _v_step(first: tuple[int, ...], second: tuple[int, ...], h: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # One reverse move; assumes len(second) < h and len(first) >= 1.
    j, _ = _ridge(first, second, h)
    moved = first[j - 1]
    idx = len(second) - h + j
    return first[:j - 1] + first[j:], second[:idx] + (moved,) + second[idx:]


def map_w(view: TwoBlockView) -> TwoBlockView:
    """Move one element of the second block into the first, keeping LIS.

    Maps the exact-LIS-h two-block sets (p, q) -> (p+1, q-1); requires
    p <= h-1 and q >= 1.  The moved element always equals x_omega + 1
    (or 1 when omega = 0).
    """
    h = lis_length(view)
    if view.p > h - 1:
        raise DomainError(
            f"first block length {view.p} must be below the LIS length {h}"
        )
    if view.q < 1:
        raise DomainError("second block is empty")
    first, second = _w_step(view.first, view.second, h)
    return TwoBlockView(first, second)


def map_v(view: TwoBlockView) -> TwoBlockView:
    """Move one element of the first block into the second; inverse of map_w.

    Maps the exact-LIS-h two-block sets (p, q) -> (p-1, q+1); requires
    p >= 1 and q <= h-1.
    """
    h = lis_length(view)
    if view.p < 1:
        raise DomainError("first block is empty")
    if view.q > h - 1:
        raise DomainError(
            f"second block length {view.q} must be below the LIS length {h}"
        )
    first, second = _v_step(view.first, view.second, h)
    return TwoBlockView(first, second)


# --- window kernels -------------------------------------------------------
#
# The heavy exhaustive suites apply these maps millions of times, so the
# standardized two-block work is cached: there are only O(2^m) distinct
# patterns of window size m.

_PATTERN_CACHE: dict[tuple[int, int, tuple[int, ...]], tuple[int, ...]] = {}


def _iterate_pattern(pattern: tuple[int, ...], p: int, steps: int) -> tuple[int, ...]:
    """Apply ``steps`` forward moves (negative: reverse) to a standardized window."""
    key = (p, steps, pattern)
    out = _PATTERN_CACHE.get(key)
    if out is None:
        first, second = pattern[:p], pattern[p:]
        h = lis_length(pattern)
        if steps >= 0:
            for _ in range(steps):
                first, second = _w_step(first, second, h)
        else:
            for _ in range(-steps):
                first, second = _v_step(first, second, h)
        out = first + second
        _PATTERN_CACHE[key] = out
    return out


def _apply_window(values: tuple[int, ...], comp: Sequence[int], l: int, steps: int) -> tuple[int, ...]:
    """Apply moves to blocks l, l+1 of a flat value tuple (1-based l)."""
    if steps == 0:
        return values
    start = sum(comp[:l - 1])
    a, b = comp[l - 1], comp[l]
    stop = start + a + b
    window = values[start:stop]
    order = sorted(window)
    rank = {v: r for r, v in enumerate(order, start=1)}
    out = _iterate_pattern(tuple(rank[v] for v in window), a, steps)
    return values[:start] + tuple(order[r - 1] for r in out) + values[stop:]


@lru_cache(maxsize=None)
def _bubble_schedule(comp: Composition, target: Composition) -> tuple[int, ...]:
    """1-based adjacent-swap positions turning ``comp`` into ``target``.

    Bubble-sort order: repeatedly fix the leftmost out-of-place part by
    pulling its leftmost matching occurrence leftward.
    """
    cur = list(comp)
    sched: list[int] = []
    for i in range(len(target)):
        if cur[i] == target[i]:
            continue
        j = cur.index(target[i], i + 1)
        for t in range(j, i, -1):
            sched.append(t)
            cur[t - 1], cur[t] = cur[t], cur[t - 1]
    return tuple(sched)


def _swap_values(comp: Sequence[int], values: tuple[int, ...], l: int) -> tuple[int, ...]:
    return _apply_window(values, comp, l, comp[l] - comp[l - 1])


def _reorder_values(comp: Composition, values: tuple[int, ...], target: Composition) -> tuple[int, ...]:
    cur = list(comp)
    for l in _bubble_schedule(comp, target):
        values = _apply_window(values, cur, l, cur[l] - cur[l - 1])
        cur[l - 1], cur[l] = cur[l], cur[l - 1]
    return values


# --- traces ----------------------------------------------------------------


@dataclass(frozen=True)
class TraceStep:
    map: str
    block: int
    before: str
    after: str


@dataclass
class BijectionTrace:
    """Ordered elementary steps of a composed map; consecutive steps chain."""

    steps: list[TraceStep] = field(default_factory=list)

    def record(self, map_name: str, block: int, before: str, after: str) -> None:
        if self.steps and self.steps[-1].after != before:
            raise AssertionError(
                f"trace steps do not chain: {self.steps[-1].after!r} -> {before!r}"
            )
        self.steps.append(TraceStep(map_name, block, before, after))

    def to_json(self) -> list[dict]:
        return [
            {"map": s.map, "block": s.block, "before": s.before, "after": s.after}
            for s in self.steps
        ]

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


def _traced_window(
    pi: BlockPermutation,
    l: int,
    steps: int,
    new_comp: Composition,
    trace: Optional[BijectionTrace],
) -> BlockPermutation:
    """Apply ``steps`` moves to blocks l, l+1, one trace entry per move."""
    if trace is None:
        values = _apply_window(pi.values, pi.comp, l, steps)
        return BlockPermutation(new_comp, values)
    name, unit = ("w", 1) if steps >= 0 else ("v", -1)
    comp = list(pi.comp)
    values = pi.values
    before = pi.text(compact=True)
    for _ in range(abs(steps)):
        values = _apply_window(values, comp, l, unit)
        comp[l - 1] += unit
        comp[l] -= unit
        cur = BlockPermutation(tuple(comp), values)
        after = cur.text(compact=True)
        trace.record(name, l, before, after)
        before = after
    return BlockPermutation(new_comp, values)


# --- block-level maps -------------------------------------------------------


def swap_adjacent(
    pi: BlockPermutation, l: int, trace: Optional[BijectionTrace] = None
) -> BlockPermutation:
    """Exchange the lengths of blocks l and l+1, preserving the global LIS.

    Standardizes the two blocks, iterates the elementary move
    |a_{l+1} - a_l| times inside the window (forward when the right block
    is longer, reverse when shorter, nothing when equal), and maps the
    values back.  Restricted to inputs of any fixed global LIS h this is
    a bijection onto the swapped composition; applying it twice at the
    same index returns the input.
    """
    if not 1 <= l < pi.n_blocks:
        raise DomainError(f"block index {l} out of range 1..{pi.n_blocks - 1}")
    a, b = pi.comp[l - 1], pi.comp[l]
    new_comp = pi.comp[:l - 1] + (b, a) + pi.comp[l + 1:]
    return _traced_window(pi, l, b - a, new_comp, trace)


def reorder_blocks(
    pi: BlockPermutation,
    target: Composition,
    trace: Optional[BijectionTrace] = None,
) -> tuple[BlockPermutation, BijectionTrace]:
    """Rearrange the composition into ``target`` by adjacent swaps.

    ``target`` must be a rearrangement of ``pi.comp`` as a multiset
    (zeros included).  Deterministic bubble-sort schedule; global LIS is
    preserved and the map is a bijection for each fixed LIS value.
    """
    target = as_composition(target)
    if Counter(target) != Counter(pi.comp):
        raise DomainError(
            f"target {target} is not a rearrangement of {pi.comp}"
        )
    if trace is None:
        trace = BijectionTrace()
    cur = pi
    for l in _bubble_schedule(pi.comp, target):
        cur = swap_adjacent(cur, l, trace)
    return cur, trace


def transfer_step(
    pi: BlockPermutation, l: int, trace: Optional[BijectionTrace] = None
) -> BlockPermutation:
    """Move one unit of length from block l+1 to block l (one forward move).

    Requires a_{l+1} >= a_l + 2.  Preserves the global LIS and is
    injective onto the composition with parts (a_l + 1, a_{l+1} - 1); it
    is not surjective in general, which is exactly why the counts grow
    toward balanced compositions.
    """
    if not 1 <= l < pi.n_blocks:
        raise DomainError(f"block index {l} out of range 1..{pi.n_blocks - 1}")
    a, b = pi.comp[l - 1], pi.comp[l]
    if b < a + 2:
        raise DomainError(
            f"transfer at {l} needs a_{{l+1}} >= a_l + 2, got ({a}, {b})"
        )
    new_comp = pi.comp[:l - 1] + (a + 1, b - 1) + pi.comp[l + 1:]
    return _traced_window(pi, l, 1, new_comp, trace)


# --- majorization -----------------------------------------------------------


def majorization_violation(a: Sequence[int], b: Sequence[int]) -> Optional[int]:
    """First 1-based prefix index where descending-sorted ``a`` fails to
    dominate descending-sorted ``b``, or None when ``a`` majorizes ``b``."""
    da = sorted(a, reverse=True)
    db = sorted(b, reverse=True)
    pa = pb = 0
    for i, (u, v) in enumerate(zip(da, db), start=1):
        pa += u
        pb += v
        if pa < pb:
            return i
    return None


def majorizes(a: Sequence[int], b: Sequence[int]) -> bool:
    """Whether ``a`` majorizes ``b`` (same length and total required)."""
    return (
        len(a) == len(b)
        and sum(a) == sum(b)
        and majorization_violation(a, b) is None
    )


@lru_cache(maxsize=None)
def _inject_plan(comp: Composition, target: Composition) -> tuple[tuple[str, int], ...]:
    """Deterministic (op, position) schedule from ``comp`` to ``target``.

    Sort ascending; while the part multisets differ, pick the recipient
    at the largest ascending index j with d_j < e_j and the donor at the
    smallest index i > j with d_i > e_i (then d_i >= d_j + 2), bubble the
    donor next to the recipient, transfer one unit, and re-sort; finally
    reorder into the order ``target`` prescribes.  Every constituent is
    injective, so any schedule works; this one is fixed for reproducible
    traces.
    """
    plan: list[tuple[str, int]] = []
    cur = list(comp)

    def reorder_to(tgt: Sequence[int]) -> None:
        for l in _bubble_schedule(tuple(cur), tuple(tgt)):
            plan.append(("swap", l))
            cur[l - 1], cur[l] = cur[l], cur[l - 1]

    if Counter(comp) == Counter(target):
        reorder_to(target)
        return tuple(plan)

    reorder_to(sorted(comp))
    goal = sorted(target)
    while cur != goal:
        j = max(t for t in range(len(cur)) if cur[t] < goal[t])
        i = min(t for t in range(j + 1, len(cur)) if cur[t] > goal[t])
        for t in range(i, j + 1, -1):
            plan.append(("swap", t))
            cur[t - 1], cur[t] = cur[t], cur[t - 1]
        plan.append(("transfer", j + 1))
        cur[j] += 1
        cur[j + 1] -= 1
        reorder_to(sorted(cur))
    reorder_to(target)
    return tuple(plan)


def majorize_inject(
    pi: BlockPermutation, target: Composition
) -> tuple[BlockPermutation, BijectionTrace]:
    """Injectively carry ``pi`` onto the majorized composition ``target``.

    Requires the descending sort of ``pi.comp`` to majorize that of
    ``target`` (same length, same total); rejects with the first violated
    prefix-sum index otherwise.  Composes adjacent swaps and unit
    transfers along the plan of :func:`_inject_plan`; the global LIS is
    preserved, so restricted to any fixed LIS the map is an injection.
    """
    target = as_composition(target)
    if len(target) != len(pi.comp):
        raise DomainError(
            f"target {target} and composition {pi.comp} differ in length"
        )
    if sum(target) != sum(pi.comp):
        raise DomainError(
            f"target {target} and composition {pi.comp} differ in total"
        )
    violated = majorization_violation(pi.comp, target)
    if violated is not None:
        raise DomainError(
            f"{pi.comp} does not majorize {target}: "
            f"prefix sum {violated} of the descending sorts fails"
        )
    trace = BijectionTrace()
    cur = pi
    for op, l in _inject_plan(pi.comp, target):
        if op == "swap":
            cur = swap_adjacent(cur, l, trace)
        else:
            cur = transfer_step(cur, l, trace)
    if cur.comp != target:
        raise AssertionError(f"plan ended at {cur.comp}, wanted {target}")
    return cur, trace


def _inject_values(comp: Composition, values: tuple[int, ...], target: Composition) -> tuple[int, ...]:
    # Kernel counterpart of majorize_inject for the exhaustive suites.
    cur = list(comp)
    for op, l in _inject_plan(comp, target):
        a, b = cur[l - 1], cur[l]
        if op == "swap":
            values = _apply_window(values, cur, l, b - a)
            cur[l - 1], cur[l] = b, a
        else:
            values = _apply_window(values, cur, l, 1)
            cur[l - 1], cur[l] = a + 1, b - 1
    return values


# --- maximum insertion/deletion ---------------------------------------------


def delete_max(pi: BlockPermutation, k: int) -> BlockPermutation:
    """Shorten a first block of length k+1 by deleting its last element.

    The input must avoid 12...(k+2); its first-block maximum is then
    forced to be N, so removing it lands on {1, ..., N-1} and the result
    still avoids the pattern.  Exact inverse of :func:`insert_max`.
    """
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    if not pi.comp or pi.comp[0] != k + 1:
        raise DomainError(
            f"first block must have length k+1 = {k + 1}, composition is {pi.comp}"
        )
    if lis_length(pi) > k + 1:
        raise DomainError(f"input contains the pattern 12...{k + 2}")
    assert pi.values[k] == pi.size, (
        "position k+1 of the first block must hold the maximum"
    )
    return BlockPermutation(
        (k,) + pi.comp[1:], pi.values[:k] + pi.values[k + 1:]
    )


def insert_max(pi: BlockPermutation, k: int) -> BlockPermutation:
    """Extend a first block of length k to k+1 by appending a new maximum.

    Inserting N+1 at position k+1 cannot create a 12...(k+2) pattern, so
    the avoiding set is carried onto the longer first block.  Exact
    inverse of :func:`delete_max`.
    """
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    if not pi.comp or pi.comp[0] != k:
        raise DomainError(
            f"first block must have length k = {k}, composition is {pi.comp}"
        )
    if lis_length(pi) > k + 1:
        raise DomainError(f"input contains the pattern 12...{k + 2}")
    return BlockPermutation(
        (k + 1,) + pi.comp[1:],
        pi.values[:k] + (pi.size + 1,) + pi.values[k:],
    )


def delete_max_at(pi: BlockPermutation, k: int, block: int) -> BlockPermutation:
    """Derived convenience: delete the maximum from any block of length k+1.

    Not a primitive: brings ``block`` to the front by adjacent swaps,
    deletes there, and moves the shortened block back.
    """
    if not 1 <= block <= pi.n_blocks:
        raise DomainError(f"block index {block} out of range 1..{pi.n_blocks}")
    comp = pi.comp
    front = (comp[block - 1],) + comp[:block - 1] + comp[block:]
    cur, _ = reorder_blocks(pi, front)
    cur = delete_max(cur, k)
    back = comp[:block - 1] + (k,) + comp[block:]
    cur, _ = reorder_blocks(cur, back)
    return cur


def insert_max_at(pi: BlockPermutation, k: int, block: int) -> BlockPermutation:
    """Derived convenience: grow any block of length k by a new maximum."""
    if not 1 <= block <= pi.n_blocks:
        raise DomainError(f"block index {block} out of range 1..{pi.n_blocks}")
    comp = pi.comp
    front = (comp[block - 1],) + comp[:block - 1] + comp[block:]
    cur, _ = reorder_blocks(pi, front)
    cur = insert_max(cur, k)
    back = comp[:block - 1] + (k + 1,) + comp[block:]
    cur, _ = reorder_blocks(cur, back)
    return cur


def lower_blocks(pi: BlockPermutation, k: int, blocks: Iterable[int]) -> BlockPermutation:
    """Delete the maximum from each listed block (all of length k+1)."""
    cur = pi
    for i in blocks:
        cur = delete_max_at(cur, k, i)
    return cur


def lift_blocks(pi: BlockPermutation, k: int, blocks: Iterable[int]) -> BlockPermutation:
    """Grow each listed block (all of length k) by a new maximum."""
    cur = pi
    for i in blocks:
        cur = insert_max_at(cur, k, i)
    return cur
