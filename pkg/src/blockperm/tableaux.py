"""
Young diagrams, hook-length and skew counting, and the block <-> row maps.

A block-ascending permutation whose composition is (p, k+1, ..., k+1)
turns into an array by writing its blocks as rows, last block on top and
first block at the bottom; the array is a standard Young tableau exactly
when the permutation avoids the increasing pattern 12...(k+2).  With a
final block of length q <= k+1 the top row is offset by k+1-q cells and
the same correspondence lands on a skew shape.

Shapes are stored in English orientation (longest row on top); the
block-to-row reversal above is the only place the drawing convention
enters.  Skew counting is a profile dynamic program over row-fill
frontiers in exact integer arithmetic; a backtracking enumerator doubles
as its independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator

from .core import (
    BlockPermutation,
    DomainError,
    SizeLimitError,
    avoids,
)

Shape = tuple[int, ...]

HOOK_CELL_CAP = 64
SKEW_STATE_BUDGET = 10_000_000


def as_shape(rows: Iterable[int]) -> Shape:
    """Normalize to a weakly decreasing tuple of positive row lengths."""
    shape = tuple(int(r) for r in rows)
    for r in shape:
        if r <= 0:
            raise DomainError(f"shape rows must be positive, got {shape}")
    for a, b in zip(shape, shape[1:]):
        if b > a:
            raise DomainError(f"shape rows must be weakly decreasing, got {shape}")
    return shape


def _check_skew(outer: Shape, inner: Shape) -> None:
    if len(inner) > len(outer):
        raise DomainError(
            f"inner shape {inner} has more rows than outer {outer}"
        )
    for i, r in enumerate(inner):
        if r > outer[i]:
            raise DomainError(
                f"inner shape {inner} does not fit inside {outer} at row {i + 1}"
            )


def _padded_inner(outer: Shape, inner: Shape) -> tuple[int, ...]:
    return inner + (0,) * (len(outer) - len(inner))


def cell_count(outer: Shape, inner: Shape = ()) -> int:
    return sum(outer) - sum(inner)


def hook_count(shape: Iterable[int]) -> int:
    """Number of standard Young tableaux of ``shape``: N! over the hook product.

    >>> hook_count((2, 2))
    2
    >>> hook_count((7,))
    1
    """
    shape = as_shape(shape)
    n = sum(shape)
    if n > HOOK_CELL_CAP:
        raise SizeLimitError(f"shape has {n} cells, cap is {HOOK_CELL_CAP}")
    if n == 0:
        return 1
    conj = [sum(1 for r in shape if r > j) for j in range(shape[0])]
    prod = 1
    for i, r in enumerate(shape):
        for j in range(r):
            prod *= (r - j) + (conj[j] - i) - 1
    count, rem = divmod(factorial(n), prod)
    if rem:
        raise AssertionError(f"hook product does not divide {n}! for {shape}")
    return count


def skew_count(outer: Iterable[int], inner: Iterable[int] = ()) -> int:
    """Number of standard fillings of the skew shape outer/inner.

    Profile dynamic program over the lattice of row-fill frontiers: a
    frontier gives how many cells of each row are filled, and a cell may
    be filled only when its left neighbour and the cell above it (when
    present in the skew shape) already are.  Exact integers throughout;
    with an empty inner shape the result equals :func:`hook_count`.

    >>> skew_count((2, 1), (1,))
    2
    """
    outer = as_shape(outer)
    inner = as_shape(inner)
    _check_skew(outer, inner)
    pad = _padded_inner(outer, inner)
    rows = len(outer)
    lens = [outer[i] - pad[i] for i in range(rows)]
    total = sum(lens)
    if total == 0:
        return 1
    start = (0,) * rows
    states: dict[tuple[int, ...], int] = {start: 1}
    for _ in range(total):
        nxt: dict[tuple[int, ...], int] = {}
        for st, ways in states.items():
            for i in range(rows):
                f = st[i]
                if f >= lens[i]:
                    continue
                col = pad[i] + f
                if i > 0 and col >= pad[i - 1] and col >= pad[i - 1] + st[i - 1]:
                    continue  # the cell above is in the skew shape but unfilled
                ns = st[:i] + (f + 1,) + st[i + 1:]
                nxt[ns] = nxt.get(ns, 0) + ways
        states = nxt
        if len(states) > SKEW_STATE_BUDGET:
            raise SizeLimitError(
                f"skew profile DP exceeded {SKEW_STATE_BUDGET} states"
            )
    return states.get(tuple(lens), 0)


@dataclass(frozen=True)
class Tableau:
    """A filling of a (possibly skew) Young diagram with 1..m.

    ``rows[i]`` holds the skew cells of row i left to right; row i spans
    columns inner_i .. outer_i - 1.  The constructor checks shape
    consistency and the value multiset; monotonicity is a separate query
    so that non-standard arrays can be built and examined.
    """

    outer: Shape
    inner: Shape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        outer = as_shape(self.outer)
        inner = as_shape(self.inner)
        _check_skew(outer, inner)
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "rows", rows)
        pad = _padded_inner(outer, inner)
        if len(rows) != len(outer):
            raise DomainError(
                f"expected {len(outer)} rows, got {len(rows)}"
            )
        for i, row in enumerate(rows):
            if len(row) != outer[i] - pad[i]:
                raise DomainError(
                    f"row {i + 1} must have {outer[i] - pad[i]} cells, got {len(row)}"
                )
        values = sorted(v for row in rows for v in row)
        if values != list(range(1, len(values) + 1)):
            raise DomainError(
                f"cell values must be exactly 1..{len(values)}"
            )

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def is_standard(self) -> bool:
        """Rows and columns strictly increasing (top to bottom)."""
        pad = _padded_inner(self.outer, self.inner)
        for row in self.rows:
            for u, w in zip(row, row[1:]):
                if u >= w:
                    return False
        for i in range(1, len(self.rows)):
            for j, v in enumerate(self.rows[i]):
                col = pad[i] + j
                above = col - pad[i - 1]
                if 0 <= above < len(self.rows[i - 1]):
                    if self.rows[i - 1][above] >= v:
                        return False
        return True

    def render(self) -> str:
        pad = _padded_inner(self.outer, self.inner)
        width = max((len(str(v)) for row in self.rows for v in row), default=1)
        lines = []
        for i, row in enumerate(self.rows):
            cells = ["." * width] * pad[i] + [str(v).rjust(width) for v in row]
            lines.append(" ".join(cells))
        return "\n".join(lines)


def render_shape(outer: Iterable[int], inner: Iterable[int] = ()) -> str:
    """ASCII diagram of a (skew) shape: ``#`` cells, ``.`` removed cells."""
    outer = as_shape(outer)
    inner = as_shape(inner)
    _check_skew(outer, inner)
    pad = _padded_inner(outer, inner)
    return "\n".join(
        " ".join(["."] * pad[i] + ["#"] * (outer[i] - pad[i]))
        for i in range(len(outer))
    )


def partitions(total: int, max_part: int | None = None) -> Iterator[Shape]:
    """All partitions of ``total`` (weakly decreasing positive parts)."""
    if total < 0:
        raise DomainError(f"total must be nonnegative, got {total}")
    if total == 0:
        yield ()
        return
    cap = total if max_part is None else min(max_part, total)
    for first in range(cap, 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def subshapes(outer: Iterable[int]) -> Iterator[Shape]:
    """All partitions fitting inside ``outer`` rowwise (the empty one first)."""
    outer = as_shape(outer)

    def rec(i: int, prev: int) -> Iterator[Shape]:
        yield ()
        if i == len(outer):
            return
        for r in range(1, min(outer[i], prev) + 1):
            for rest in rec(i + 1, r):
                yield (r,) + rest

    yield from rec(0, outer[0] if outer else 0)


def count_standard_brute(outer: Iterable[int], inner: Iterable[int] = ()) -> int:
    """Count standard fillings by plain backtracking.

    Independent oracle for :func:`hook_count` and :func:`skew_count`:
    places 1..m one at a time into any admissible frontier cell.
    """
    outer = as_shape(outer)
    inner = as_shape(inner)
    _check_skew(outer, inner)
    pad = _padded_inner(outer, inner)
    rows = len(outer)
    lens = [outer[i] - pad[i] for i in range(rows)]
    total = sum(lens)
    fill = [0] * rows

    def rec(remaining: int) -> int:
        if remaining == 0:
            return 1
        count = 0
        for i in range(rows):
            f = fill[i]
            if f >= lens[i]:
                continue
            col = pad[i] + f
            if i > 0 and col >= pad[i - 1] and col >= pad[i - 1] + fill[i - 1]:
                continue
            fill[i] += 1
            count += rec(remaining - 1)
            fill[i] -= 1
        return count

    return rec(total)


def enumerate_standard(outer: Iterable[int], inner: Iterable[int] = ()) -> Iterator[Tableau]:
    """Backtracking enumeration of every standard filling; the oracle for
    :func:`hook_count` and :func:`skew_count`."""
    outer = as_shape(outer)
    inner = as_shape(inner)
    _check_skew(outer, inner)
    pad = _padded_inner(outer, inner)
    rows = len(outer)
    lens = [outer[i] - pad[i] for i in range(rows)]
    total = sum(lens)
    fill = [0] * rows
    grid: list[list[int]] = [[0] * lens[i] for i in range(rows)]

    def rec(value: int) -> Iterator[Tableau]:
        if value > total:
            yield Tableau(outer, inner, tuple(tuple(row) for row in grid))
            return
        for i in range(rows):
            f = fill[i]
            if f >= lens[i]:
                continue
            col = pad[i] + f
            if i > 0 and col >= pad[i - 1] and col >= pad[i - 1] + fill[i - 1]:
                continue
            grid[i][f] = value
            fill[i] += 1
            yield from rec(value + 1)
            fill[i] -= 1
        return

    yield from rec(1)


# --- permutation <-> tableau ------------------------------------------------


def _rect_tail_params(pi: BlockPermutation, k: int) -> int:
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    comp = pi.comp
    if not comp or not 1 <= comp[0] <= k + 1:
        raise DomainError(
            f"first block length must be 1..{k + 1}, composition is {comp}"
        )
    if any(a != k + 1 for a in comp[1:]):
        raise DomainError(
            f"blocks after the first must all have length {k + 1}, "
            f"composition is {comp}"
        )
    return comp[0]


def perm_to_tableau(pi: BlockPermutation, k: int) -> Tableau:
    """Write the blocks of ``pi`` as rows, last block on top.

    ``pi`` must have composition (p, k+1, ..., k+1) with p <= k+1 and
    avoid 12...(k+2); the result is then a standard tableau of shape
    ((k+1)^(n-1), p).  Inverse: :func:`tableau_to_perm`.
    """
    p = _rect_tail_params(pi, k)
    if not avoids(pi, k):
        raise DomainError(f"input contains the pattern 12...{k + 2}")
    n = pi.n_blocks
    outer = (k + 1,) * (n - 1) + (p,)
    t = Tableau(outer, (), tuple(reversed(pi.blocks())))
    assert t.is_standard(), "avoiding input must give increasing columns"
    return t


def tableau_to_perm(t: Tableau, k: int) -> BlockPermutation:
    """Read rows as blocks, bottom row first; inverse of :func:`perm_to_tableau`."""
    if t.inner != ():
        raise DomainError(f"expected a straight shape, got inner {t.inner}")
    if any(r != k + 1 for r in t.outer[:-1]) or t.outer[-1] > k + 1:
        raise DomainError(
            f"shape must be ((k+1)^(n-1), p) with k = {k}, got {t.outer}"
        )
    if not t.is_standard():
        raise DomainError("filling is not standard")
    pi = BlockPermutation.from_blocks(tuple(reversed(t.rows)))
    assert avoids(pi, k), "standard filling must avoid the pattern"
    return pi


def _skew_tail_params(pi: BlockPermutation, k: int) -> tuple[int, int]:
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    comp = pi.comp
    if len(comp) < 2:
        raise DomainError(
            f"need at least two blocks, composition is {comp}"
        )
    p, q = comp[0], comp[-1]
    if not 1 <= p <= k + 1 or not 1 <= q <= k + 1:
        raise DomainError(
            f"first and last block lengths must be 1..{k + 1}, "
            f"composition is {comp}"
        )
    if any(a != k + 1 for a in comp[1:-1]):
        raise DomainError(
            f"middle blocks must all have length {k + 1}, composition is {comp}"
        )
    return p, q


def perm_to_skew_tableau(pi: BlockPermutation, k: int) -> Tableau:
    """Write the blocks as rows with the top row offset by k+1-q cells.

    ``pi`` must have composition (p, k+1, ..., k+1, q) and avoid
    12...(k+2); the result is a standard filling of the skew shape
    ((k+1)^(n-1), p) / (k+1-q).  With q = k+1 this is exactly
    :func:`perm_to_tableau`.  Inverse: :func:`skew_tableau_to_perm`.
    """
    p, q = _skew_tail_params(pi, k)
    if not avoids(pi, k):
        raise DomainError(f"input contains the pattern 12...{k + 2}")
    n = pi.n_blocks
    outer = (k + 1,) * (n - 1) + (p,)
    offset = k + 1 - q
    inner = (offset,) if offset else ()
    t = Tableau(outer, inner, tuple(reversed(pi.blocks())))
    assert t.is_standard(), "avoiding input must give increasing columns"
    return t


def skew_tableau_to_perm(t: Tableau, k: int) -> BlockPermutation:
    """Read skew rows as blocks, bottom row first; inverse of
    :func:`perm_to_skew_tableau`."""
    if len(t.inner) > 1:
        raise DomainError(
            f"inner shape must have at most one row, got {t.inner}"
        )
    if len(t.outer) < 2:
        raise DomainError(f"need at least two rows, got shape {t.outer}")
    if any(r != k + 1 for r in t.outer[:-1]) or t.outer[-1] > k + 1:
        raise DomainError(
            f"shape must be ((k+1)^(n-1), p) with k = {k}, got {t.outer}"
        )
    if t.inner and t.inner[0] > k:
        raise DomainError(f"top-row offset must be at most k = {k}")
    if not t.is_standard():
        raise DomainError("filling is not standard")
    pi = BlockPermutation.from_blocks(tuple(reversed(t.rows)))
    assert avoids(pi, k), "standard filling must avoid the pattern"
    return pi
