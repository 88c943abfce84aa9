"""
Exhaustive generation and counting of block-ascending permutations.

Generation streams every ascending permutation of a composition in
lexicographic order of the flat value sequence; the pattern-avoiding and
exact-LIS subsets are filters on top.  These streams are the brute-force
oracle behind every bijection check in :mod:`blockperm.verify`.

Counts use Python's arbitrary-precision integers; the factorial forms
overflow 64 bits quickly.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Iterator

from .core import (
    BlockPermutation,
    Composition,
    DomainError,
    SizeLimitError,
    as_composition,
    lis_length,
)

DEFAULT_CAP = 14


def _check_cap(comp: Composition, cap: int) -> None:
    n = sum(comp)
    if n > cap:
        raise SizeLimitError(
            f"N = {n} exceeds the size cap {cap}; pass cap={n} to override"
        )


def gen_values(comp: Composition, cap: int = DEFAULT_CAP) -> Iterator[tuple[int, ...]]:
    """Yield the flat value tuples of every ascending permutation of ``comp``.

    Lexicographic order; the count is multinomial(N; a_1, ..., a_n).
    """
    comp = as_composition(comp)
    _check_cap(comp, cap)

    def rec(pool: tuple[int, ...], parts: Composition) -> Iterator[tuple[int, ...]]:
        if not parts:
            yield ()
            return
        a, rest_parts = parts[0], parts[1:]
        for first in combinations(pool, a):
            chosen = set(first)
            rest = tuple(v for v in pool if v not in chosen)
            for tail in rec(rest, rest_parts):
                yield first + tail

    return rec(tuple(range(1, sum(comp) + 1)), comp)


def gen_ascending(comp: Composition, cap: int = DEFAULT_CAP) -> Iterator[BlockPermutation]:
    """Yield every ascending permutation of ``comp``, lexicographically."""
    comp = as_composition(comp)
    for values in gen_values(comp, cap):
        yield BlockPermutation._trusted(comp, values)


def gen_L(k: int, comp: Composition, cap: int = DEFAULT_CAP) -> Iterator[BlockPermutation]:
    """Ascending permutations of ``comp`` avoiding the pattern 12...(k+2).

    Empty whenever some part is at least k+2: that block alone contains
    the pattern.
    """
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    comp = as_composition(comp)
    if max(comp, default=0) >= k + 2:
        return
    for values in gen_values(comp, cap):
        if lis_length(values) <= k + 1:
            yield BlockPermutation._trusted(comp, values)


def gen_D(h: int, comp: Composition, cap: int = DEFAULT_CAP) -> Iterator[BlockPermutation]:
    """Ascending permutations of ``comp`` with LIS length exactly ``h``."""
    if h < 0:
        raise DomainError(f"h must be nonnegative, got {h}")
    comp = as_composition(comp)
    if h < max(comp, default=0) or h > sum(comp):
        return
    for values in gen_values(comp, cap):
        if lis_length(values) == h:
            yield BlockPermutation._trusted(comp, values)


@lru_cache(maxsize=None)
def _tally(comp: Composition) -> dict[int, int]:
    counts: dict[int, int] = {}
    for values in gen_values(comp, cap=sum(comp)):
        h = lis_length(values)
        counts[h] = counts.get(h, 0) + 1
    return counts


def lis_tally(comp: Composition, cap: int = DEFAULT_CAP) -> dict[int, int]:
    """Map h -> number of ascending permutations of ``comp`` with LIS h.

    Cached per composition; the tally partitions all multinomial(N; comp)
    ascending permutations.
    """
    comp = as_composition(comp)
    _check_cap(comp, cap)
    return dict(_tally(comp))


def count_D(h: int, comp: Composition, cap: int = DEFAULT_CAP) -> int:
    """Brute-force cardinality of the exact-LIS-h set."""
    if h < 0:
        raise DomainError(f"h must be nonnegative, got {h}")
    return lis_tally(comp, cap).get(h, 0)


def count_L(k: int, comp: Composition, cap: int = DEFAULT_CAP) -> int:
    """Brute-force cardinality of the 12...(k+2)-avoiding set."""
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    tally = lis_tally(comp, cap)
    return sum(c for h, c in tally.items() if h <= k + 1)


def multinomial(comp: Composition) -> int:
    comp = as_composition(comp)
    out = factorial(sum(comp))
    for a in comp:
        out //= factorial(a)
    return out


def compositions(total: int, max_part: int | None = None) -> Iterator[Composition]:
    """All compositions of ``total`` into positive parts (optionally capped)."""
    if total < 0:
        raise DomainError(f"total must be nonnegative, got {total}")
    cap = total if max_part is None else min(max_part, total)
    if total == 0:
        yield ()
        return

    def rec(rest: int) -> Iterator[Composition]:
        if rest == 0:
            yield ()
            return
        for a in range(1, min(cap, rest) + 1):
            for tail in rec(rest - a):
                yield (a,) + tail

    yield from rec(total)


def catalan_triangle(n: int, k: int) -> int:
    """Entry (n, k) of the Catalan triangle.

    Computed as binom(n+k, k) - binom(n+k, k-1) and cross-checked against
    the factorial form (n+k)! (n-k+1) / (k! (n+1)!) on every call.
    C(n, n) is the nth Catalan number.

    >>> catalan_triangle(3, 1)
    3
    >>> catalan_triangle(4, 4)
    14
    """
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"need 0 <= k <= n, got n={n}, k={k}")
    binom_form = comb(n + k, k) - (comb(n + k, k - 1) if k >= 1 else 0)
    fact_form = factorial(n + k) * (n - k + 1) // (factorial(k) * factorial(n + 1))
    if binom_form != fact_form:
        raise AssertionError(
            f"closed forms disagree at ({n}, {k}): {binom_form} != {fact_form}"
        )
    return binom_form


def count_d_two(h: int, p: int, q: int, strict: bool = False) -> int:
    """Closed-form cardinality of the exact-LIS-h two-block set on (p, q).

    Equals ``catalan_triangle(h, p+q-h)`` when p+q >= h and 0 otherwise.
    With ``strict=True``, p and q outside 1..h are rejected instead of
    counted as 0.
    """
    if h < 1:
        raise DomainError(f"h must be positive, got {h}")
    if p < 0 or q < 0:
        raise DomainError(f"block lengths must be nonnegative, got ({p}, {q})")
    if strict and not (1 <= p <= h and 1 <= q <= h):
        raise DomainError(f"need 1 <= p, q <= h = {h}, got ({p}, {q})")
    if p > h or q > h or p + q < h:
        return 0
    return catalan_triangle(h, p + q - h)


@dataclass(frozen=True)
class CountEntry:
    comp: Composition
    selector: str  # "h" for exact LIS, "k" for pattern-avoiding
    param: int
    count: int


@dataclass(frozen=True)
class CountTable:
    """Per-composition counts keyed by exact LIS h or avoidance bound k."""

    entries: tuple[CountEntry, ...]

    @classmethod
    def for_composition(cls, comp: Composition, cap: int = DEFAULT_CAP) -> "CountTable":
        comp = as_composition(comp)
        tally = lis_tally(comp, cap)
        n = sum(comp)
        rows = [
            CountEntry(comp, "h", h, tally.get(h, 0))
            for h in range(0 if n == 0 else 1, n + 1)
        ]
        rows += [
            CountEntry(comp, "k", k, sum(c for h, c in tally.items() if h <= k + 1))
            for k in range(0, max(n, 1))
        ]
        return cls(tuple(rows))

    def check(self) -> None:
        """Every k row must equal the sum of the h rows with h <= k+1."""
        by_comp: dict[Composition, dict[tuple[str, int], int]] = {}
        for e in self.entries:
            by_comp.setdefault(e.comp, {})[(e.selector, e.param)] = e.count
        for comp, rows in by_comp.items():
            for (sel, k), count in rows.items():
                if sel != "k":
                    continue
                total = sum(
                    c for (s, h), c in rows.items() if s == "h" and h <= k + 1
                )
                if count != total:
                    raise AssertionError(
                        f"count table inconsistent at comp={comp}, k={k}: "
                        f"{count} != {total}"
                    )

    def to_rows(self) -> list[dict]:
        return [
            {
                "comp": ",".join(str(a) for a in e.comp),
                "param": f"{e.selector}={e.param}",
                "count": e.count,
            }
            for e in self.entries
        ]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["comp", "param", "count"])
        writer.writeheader()
        for row in self.to_rows():
            writer.writerow(row)
        return buf.getvalue()
