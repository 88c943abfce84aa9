"""
Block-ascending permutations.

A permutation of {1, ..., N} is *(a_1, ..., a_n)-ascending* when it splits
into consecutive blocks of lengths a_1, ..., a_n, each strictly increasing
left to right; equivalently, its descent set is contained in the partial
sums {a_1, a_1+a_2, ...}.  Text notation separates blocks with ``|`` and
values with commas, e.g. ``"2,3,6|1,4,5,7,8"``.  When every value is a
single digit the commas may be dropped on input: ``"236|14578"``.

Positions, block indices, and values are 1-based throughout.  Zero-length
blocks are allowed and preserved; they render as empty strings between
``|`` separators.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

Composition = tuple[int, ...]


class BlockPermError(ValueError):
    """Base class for all errors raised by this package."""


class ParseError(BlockPermError):
    """The permutation text is malformed."""


class DuplicateValueError(BlockPermError):
    """A value occurs more than once."""


class NotPermutationError(BlockPermError):
    """The values are not exactly {1, ..., N}."""


class BlockDescentError(BlockPermError):
    """A block contains a descending adjacent pair."""


class DomainError(BlockPermError):
    """An operation was applied outside its domain."""


class SizeLimitError(BlockPermError):
    """A size cap was exceeded; pass a larger cap to override."""


def as_composition(parts: Iterable[int]) -> Composition:
    """Normalize ``parts`` to a tuple of nonnegative ints."""
    comp = tuple(int(a) for a in parts)
    for a in comp:
        if a < 0:
            raise DomainError(f"composition parts must be nonnegative, got {comp}")
    return comp


@dataclass(frozen=True)
class BlockPermutation:
    """A permutation of {1, ..., N} ascending within the blocks of ``comp``.

    >>> pi = BlockPermutation((3, 5), (2, 3, 6, 1, 4, 5, 7, 8))
    >>> pi.blocks()
    ((2, 3, 6), (1, 4, 5, 7, 8))
    >>> pi.text(compact=True)
    '236|14578'
    """

    comp: Composition
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        comp = as_composition(self.comp)
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "comp", comp)
        object.__setattr__(self, "values", values)
        n = sum(comp)
        if len(values) != n:
            raise NotPermutationError(
                f"composition {comp} needs {n} values, got {len(values)}"
            )
        seen = set()
        for v in values:
            if v in seen:
                raise DuplicateValueError(f"value {v} occurs more than once")
            seen.add(v)
        for v in values:
            if not 1 <= v <= n:
                raise NotPermutationError(
                    f"values must be exactly 1..{n}, got {v}"
                )
        pos = 0
        for a in comp:
            block = values[pos:pos + a]
            for u, w in zip(block, block[1:]):
                if u >= w:
                    raise BlockDescentError(
                        f"block {block} is not strictly increasing"
                    )
            pos += a

    @classmethod
    def _trusted(cls, comp: Composition, values: tuple[int, ...]) -> "BlockPermutation":
        # Internal fast path for generators whose output is valid by construction.
        self = object.__new__(cls)
        object.__setattr__(self, "comp", comp)
        object.__setattr__(self, "values", values)
        return self

    @classmethod
    def from_blocks(cls, blocks: Iterable[Sequence[int]]) -> "BlockPermutation":
        blocks = tuple(tuple(b) for b in blocks)
        comp = tuple(len(b) for b in blocks)
        return cls(comp, tuple(v for b in blocks for v in b))

    @property
    def size(self) -> int:
        """N, the number of values."""
        return len(self.values)

    @property
    def n_blocks(self) -> int:
        return len(self.comp)

    def block(self, i: int) -> tuple[int, ...]:
        """The ``i``-th block, 1-based."""
        if not 1 <= i <= self.n_blocks:
            raise DomainError(f"block index {i} out of range 1..{self.n_blocks}")
        start = sum(self.comp[:i - 1])
        return self.values[start:start + self.comp[i - 1]]

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out = []
        pos = 0
        for a in self.comp:
            out.append(self.values[pos:pos + a])
            pos += a
        return tuple(out)

    def boundaries(self) -> tuple[int, ...]:
        """Partial sums a_1, a_1+a_2, ..., excluding the final total."""
        sums = []
        acc = 0
        for a in self.comp[:-1]:
            acc += a
            sums.append(acc)
        return tuple(sums)

    def text(self, compact: bool = False) -> str:
        """Render as block text.

        The canonical form is comma-separated and unambiguous for any N.
        With ``compact=True``, values are concatenated digit strings
        whenever N <= 9 (the notation used for small examples).
        """
        if compact and self.size <= 9:
            return "|".join("".join(str(v) for v in b) for b in self.blocks())
        return "|".join(",".join(str(v) for v in b) for b in self.blocks())

    def to_json(self) -> dict:
        return {"comp": list(self.comp), "values": list(self.values)}

    @classmethod
    def from_json(cls, data: dict) -> "BlockPermutation":
        try:
            return cls(tuple(data["comp"]), tuple(data["values"]))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad permutation JSON: {data!r}") from exc

    def __str__(self) -> str:
        return self.text(compact=True)


@dataclass(frozen=True)
class TwoBlockView:
    """A two-block permutation with the second block indexed right to left.

    ``first`` holds x_1 < ... < x_p in reading order.  ``second`` holds the
    second block in reading order; its right-to-left labels are
    y_1 > y_2 > ... > y_q, so ``y(1)`` is the largest element of the second
    block and ``y(i) == second[q - i]``.  The values must form a
    permutation of {1, ..., p+q}.
    """

    first: tuple[int, ...]
    second: tuple[int, ...]

    def __post_init__(self) -> None:
        first = tuple(int(v) for v in self.first)
        second = tuple(int(v) for v in self.second)
        object.__setattr__(self, "first", first)
        object.__setattr__(self, "second", second)
        for block in (first, second):
            for u, w in zip(block, block[1:]):
                if u >= w:
                    raise BlockDescentError(
                        f"block {block} is not strictly increasing"
                    )
        n = len(first) + len(second)
        if sorted(first + second) != list(range(1, n + 1)):
            raise NotPermutationError(
                f"values must be exactly 1..{n}, got {first + second}"
            )

    @property
    def p(self) -> int:
        return len(self.first)

    @property
    def q(self) -> int:
        return len(self.second)

    def x(self, i: int) -> int:
        if not 1 <= i <= self.p:
            raise DomainError(f"x index {i} out of range 1..{self.p}")
        return self.first[i - 1]

    def y(self, i: int) -> int:
        if not 1 <= i <= self.q:
            raise DomainError(f"y index {i} out of range 1..{self.q}")
        return self.second[self.q - i]

    def sequence(self) -> tuple[int, ...]:
        return self.first + self.second

    @classmethod
    def from_perm(cls, pi: BlockPermutation) -> "TwoBlockView":
        if pi.n_blocks != 2:
            raise DomainError(
                f"need exactly two blocks, got composition {pi.comp}"
            )
        return cls(pi.block(1), pi.block(2))

    def to_perm(self) -> BlockPermutation:
        return BlockPermutation((self.p, self.q), self.sequence())

    def __str__(self) -> str:
        return self.to_perm().text(compact=True)


def parse(text: str) -> BlockPermutation:
    """Parse block text into a :class:`BlockPermutation`.

    >>> parse("236|14578").comp
    (3, 5)
    >>> parse("2,3|1,4,5") == parse("23|145")
    True

    The empty string parses as the single empty block; text cannot
    distinguish it from the zero-block permutation, which also renders
    as ``""``.
    """
    s = text.strip()
    if not s:
        return BlockPermutation((0,), ())
    blocks: list[tuple[int, ...]] = []
    for chunk in s.split("|"):
        chunk = chunk.strip()
        if not chunk:
            blocks.append(())
        elif "," in chunk:
            try:
                blocks.append(tuple(int(t.strip()) for t in chunk.split(",")))
            except ValueError as exc:
                raise ParseError(f"bad block {chunk!r} in {text!r}") from exc
        else:
            if not chunk.isdigit():
                raise ParseError(f"bad block {chunk!r} in {text!r}")
            if len(chunk) == 1:
                blocks.append((int(chunk),))
            else:
                blocks.append(tuple(int(c) for c in chunk))
    return BlockPermutation.from_blocks(blocks)


PermLike = Union[BlockPermutation, TwoBlockView, Sequence[int]]


def _values_of(perm: PermLike) -> Sequence[int]:
    if isinstance(perm, BlockPermutation):
        return perm.values
    if isinstance(perm, TwoBlockView):
        return perm.sequence()
    return perm


def lis_length(perm: PermLike) -> int:
    """Length of the longest strictly increasing subsequence.

    Patience algorithm, O(N log N).  Accepts a permutation object or any
    value sequence.

    >>> lis_length(parse("236|14578"))
    6
    >>> lis_length((1, 3, 6, 8, 2, 4, 5, 7))
    5
    """
    tails: list[int] = []
    for v in _values_of(perm):
        i = bisect_left(tails, v)
        if i == len(tails):
            tails.append(v)
        else:
            tails[i] = v
    return len(tails)


def avoids(pi: PermLike, k: int) -> bool:
    """True when ``pi`` has no increasing subsequence of length k+2."""
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    return lis_length(pi) <= k + 1


def classify(pi: PermLike, k: int) -> str:
    """``"avoids"`` or ``"contains"`` for the increasing pattern 12...(k+2)."""
    return "avoids" if avoids(pi, k) else "contains"


def descent_set(pi: BlockPermutation) -> set[int]:
    """1-based positions i with value_i > value_{i+1}.

    Always a subset of the block boundaries of ``pi.comp``.
    """
    vals = pi.values
    return {i + 1 for i in range(len(vals) - 1) if vals[i] > vals[i + 1]}


def standardize(pi: BlockPermutation, l: int) -> tuple[BlockPermutation, dict[int, int]]:
    """Extract blocks l, l+1 as a rank pattern on {1, ..., a_l + a_{l+1}}.

    Returns the two-block pattern and the rank -> original-value map that
    :func:`substitute` uses to undo the extraction.
    """
    if not 1 <= l < pi.n_blocks:
        raise DomainError(
            f"block index {l} out of range 1..{pi.n_blocks - 1}"
        )
    x, y = pi.block(l), pi.block(l + 1)
    order = sorted(x + y)
    rank = {v: r for r, v in enumerate(order, start=1)}
    pattern = BlockPermutation(
        (len(x), len(y)), tuple(rank[v] for v in x + y)
    )
    return pattern, {r: v for r, v in enumerate(order, start=1)}


def substitute(pattern: BlockPermutation, value_map: dict[int, int]) -> tuple[tuple[int, ...], ...]:
    """Replace each rank in ``pattern`` by its original value, blockwise.

    Inverse of :func:`standardize`: the map must send {1, ..., m}
    increasingly onto the original values.  Those values are generally
    not {1, ..., m}, so the result is the tuple of ascending blocks
    rather than a :class:`BlockPermutation`.
    """
    if set(value_map) != set(range(1, pattern.size + 1)):
        raise DomainError(
            f"value map domain must be 1..{pattern.size}, got {sorted(value_map)}"
        )
    image = [value_map[r] for r in range(1, pattern.size + 1)]
    for u, w in zip(image, image[1:]):
        if u >= w:
            raise DomainError(
                "value map must be increasing to preserve relative order"
            )
    return tuple(
        tuple(value_map[v] for v in block) for block in pattern.blocks()
    )
