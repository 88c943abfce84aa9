"""
Brute-force verification suites for every map and counting formula.

Each check enumerates the relevant permutation or tableau sets
exhaustively at desk scale and confronts the claimed bijection, injection,
or closed form with them, reporting the first counterexample it finds.
Suites: ``w-v`` (the elementary two-block moves), ``swap`` (adjacent
swaps, reordering, max insertion/deletion), ``concavity`` (unit transfers
and the majorization injection), ``catalan`` (two-block closed forms),
``tableaux`` (hook/skew counts and the block-row correspondences).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from time import perf_counter
from typing import Iterator, Optional, Sequence

from .bijections import (
    _apply_window,
    _inject_values,
    _reorder_values,
    _ridge,
    _swap_values,
    _v_step,
    _w_step,
    delete_max,
    insert_max,
    lower_blocks,
    majorizes,
)
from .core import BlockPermutation, Composition, DomainError, lis_length
from .enumeration import (
    catalan_triangle,
    compositions,
    count_D,
    count_L,
    count_d_two,
    gen_L,
    gen_values,
    lis_tally,
    multinomial,
)
from .tableaux import (
    Tableau,
    count_standard_brute,
    hook_count,
    partitions,
    perm_to_skew_tableau,
    perm_to_tableau,
    skew_count,
    skew_tableau_to_perm,
    subshapes,
    tableau_to_perm,
)

SUITE_NAMES = ("w-v", "swap", "concavity", "catalan", "tableaux")


@dataclass
class Check:
    name: str
    ok: bool
    detail: str
    counterexample: Optional[str] = None
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "detail": self.detail,
            "counterexample": self.counterexample,
            "seconds": self.seconds,
        }


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def _done(name: str, t0: float, detail: str, cex: Optional[str] = None) -> Check:
    return Check(name, cex is None, detail, cex, round(perf_counter() - t0, 3))


def _fmt(comp: Sequence[int], values: Sequence[int]) -> str:
    return BlockPermutation._trusted(tuple(comp), tuple(values)).text(compact=True)


def _ascending_ok(comp: Sequence[int], values: Sequence[int]) -> bool:
    pos = 0
    for a in comp:
        for i in range(pos, pos + a - 1):
            if values[i] >= values[i + 1]:
                return False
        pos += a
    return True


def _two_block_perms(max_sum: int) -> Iterator[tuple[int, int, tuple[int, ...]]]:
    for m in range(max_sum + 1):
        for p in range(m + 1):
            for values in gen_values((p, m - p), cap=max(m, 14)):
                yield p, m - p, values


# --- w-v suite ---------------------------------------------------------------


def check_wv_inverse(max_sum: int = 10, max_h: int = 6) -> Check:
    """The two elementary moves preserve LIS and undo each other."""
    t0 = perf_counter()
    checked = 0
    for p, q, values in _two_block_perms(max_sum):
        h = lis_length(values)
        if h > max_h:
            continue
        x, y = values[:p], values[p:]
        if p <= h - 1 and q >= 1:
            wx, wy = _w_step(x, y, h)
            if lis_length(wx + wy) != h:
                return _done(
                    "w-v-inverse", t0, "LIS not preserved by the forward move",
                    _fmt((p, q), values),
                )
            if _v_step(wx, wy, h) != (x, y):
                return _done(
                    "w-v-inverse", t0, "reverse move fails to undo forward",
                    _fmt((p, q), values),
                )
            checked += 1
        if p >= 1 and q <= h - 1:
            vx, vy = _v_step(x, y, h)
            if lis_length(vx + vy) != h or _w_step(vx, vy, h) != (x, y):
                return _done(
                    "w-v-inverse", t0, "forward move fails to undo reverse",
                    _fmt((p, q), values),
                )
            checked += 1
    return _done(
        "w-v-inverse", t0,
        f"{checked} applications inverted (p+q <= {max_sum}, h <= {max_h})",
    )


def check_ridge_shift(max_sum: int = 9) -> Check:
    """Moved element is x_omega + 1 and nu jumps to omega + 1 after the move."""
    t0 = perf_counter()
    checked = 0
    for p, q, values in _two_block_perms(max_sum):
        h = lis_length(values)
        x, y = values[:p], values[p:]
        if not (p <= h - 1 and q >= 1):
            continue
        omega = _ridge(x, y, h)[1]
        moved = y[q - (h - omega)]
        expected = x[omega - 1] + 1 if omega >= 1 else 1
        if moved != expected:
            return _done(
                "w-ridge-shift", t0,
                f"moved element {moved} is not {expected}", _fmt((p, q), values),
            )
        wx, wy = _w_step(x, y, h)
        if _ridge(wx, wy, h)[0] != omega + 1:
            return _done(
                "w-ridge-shift", t0,
                "smallest ridge index of the image is not omega + 1",
                _fmt((p, q), values),
            )
        checked += 1
    return _done(
        "w-ridge-shift", t0, f"{checked} moves checked (p+q <= {max_sum})"
    )


def check_interval_lis(max_sum: int = 9) -> Check:
    """The forward move preserves the LIS of every value interval [a, b]."""
    t0 = perf_counter()
    checked = 0
    for p, q, values in _two_block_perms(max_sum):
        h = lis_length(values)
        if not (p <= h - 1 and q >= 1):
            continue
        wx, wy = _w_step(values[:p], values[p:], h)
        image = wx + wy
        m = p + q
        for a in range(1, m + 1):
            for b in range(a, m + 1):
                before = lis_length([v for v in values if a <= v <= b])
                after = lis_length([v for v in image if a <= v <= b])
                if before != after:
                    return _done(
                        "w-interval-lis", t0,
                        f"interval [{a}, {b}] LIS changed {before} -> {after}",
                        _fmt((p, q), values),
                    )
        checked += 1
    return _done(
        "w-interval-lis", t0,
        f"{checked} moves checked over all intervals (p+q <= {max_sum})",
    )


# --- swap suite --------------------------------------------------------------


def check_swap_involution(max_n: int = 9, max_part: int = 6) -> Check:
    """Swapping adjacent blocks twice is the identity and preserves LIS.

    Positions with equal adjacent lengths are skipped: the map is the
    identity there by construction (zero elementary moves).
    """
    t0 = perf_counter()
    checked = 0
    for n_total in range(max_n + 1):
        for comp in compositions(n_total, max_part=max_part):
            n = len(comp)
            positions = [l for l in range(1, n) if comp[l - 1] != comp[l]]
            if not positions:
                continue
            swapped = {
                l: comp[:l - 1] + (comp[l], comp[l - 1]) + comp[l + 1:]
                for l in positions
            }
            for values in gen_values(comp):
                h = lis_length(values)
                for l in positions:
                    out = _swap_values(comp, values, l)
                    sc = swapped[l]
                    if not _ascending_ok(sc, out) or lis_length(out) != h:
                        return _done(
                            "swap-involution", t0,
                            f"swap at {l} broke the image",
                            _fmt(comp, values),
                        )
                    if _swap_values(sc, out, l) != values:
                        return _done(
                            "swap-involution", t0,
                            f"double swap at {l} is not the identity",
                            _fmt(comp, values),
                        )
                    checked += 1
    return _done(
        "swap-involution", t0,
        f"{checked} double swaps (N <= {max_n}, parts <= {max_part})",
    )


def check_reorder_bijection(max_n: int = 9, max_part: int = 6) -> Check:
    """Reordering onto the sorted composition hits every target exactly once.

    For each composition, every ascending permutation is mapped onto the
    ascending-sorted composition; the image must be valid, LIS-preserving,
    and collision-free, so by cardinality it equals the whole target set.
    """
    t0 = perf_counter()
    mapped = 0
    for n_total in range(max_n + 1):
        groups: dict[tuple[int, ...], list[Composition]] = {}
        for comp in compositions(n_total, max_part=max_part):
            groups.setdefault(tuple(sorted(comp)), []).append(comp)
        for canon, comps in groups.items():
            if len(comps) == 1:
                continue
            expected = multinomial(canon)
            for comp in comps:
                if comp == canon:
                    continue
                seen: set[tuple[int, ...]] = set()
                for values in gen_values(comp):
                    out = _reorder_values(comp, values, canon)
                    if not _ascending_ok(canon, out):
                        return _done(
                            "reorder-bijection", t0,
                            f"image invalid for {canon}", _fmt(comp, values),
                        )
                    if lis_length(out) != lis_length(values):
                        return _done(
                            "reorder-bijection", t0,
                            "LIS not preserved", _fmt(comp, values),
                        )
                    seen.add(out)
                    mapped += 1
                if len(seen) != expected:
                    return _done(
                        "reorder-bijection", t0,
                        f"{comp} -> {canon}: {len(seen)} images, "
                        f"expected {expected}",
                    )
    return _done(
        "reorder-bijection", t0,
        f"{mapped} permutations mapped by image-set comparison "
        f"(N <= {max_n}, parts <= {max_part})",
    )


def check_symmetry_counts(max_n: int = 9, max_part: int = 6) -> Check:
    """Exact-LIS tallies agree across every rearrangement of a composition."""
    t0 = perf_counter()
    groups_checked = 0
    for n_total in range(max_n + 1):
        groups: dict[tuple[int, ...], list[Composition]] = {}
        for comp in compositions(n_total, max_part=max_part):
            groups.setdefault(tuple(sorted(comp)), []).append(comp)
        for comps in groups.values():
            reference = lis_tally(comps[0])
            for comp in comps[1:]:
                if lis_tally(comp) != reference:
                    return _done(
                        "count-symmetry", t0,
                        f"tallies differ: {comps[0]} vs {comp}",
                        f"{comps[0]} -> {reference}, {comp} -> {lis_tally(comp)}",
                    )
            groups_checked += 1
    return _done(
        "count-symmetry", t0,
        f"{groups_checked} rearrangement classes "
        f"(N <= {max_n}, parts <= {max_part})",
    )


def check_insert_delete(max_n: int = 9, max_k: int = 3) -> Check:
    """Max deletion/insertion are mutually inverse bijections blockwise."""
    t0 = perf_counter()
    checked = 0
    for k in range(1, max_k + 1):
        for rest_total in range(max_n - k):
            for rest in compositions(rest_total):
                if max(rest, default=0) >= k + 2:
                    continue  # both sides empty
                upper = (k + 1,) + rest
                lower = (k,) + rest
                upper_set = list(gen_L(k, upper))
                lower_count = count_L(k, lower)
                seen: set[tuple[int, ...]] = set()
                for pi in upper_set:
                    d = delete_max(pi, k)
                    if d.comp != lower or lis_length(d) > k + 1:
                        return _done(
                            "insert-delete-max", t0, "deletion left the set",
                            pi.text(compact=True),
                        )
                    if insert_max(d, k) != pi:
                        return _done(
                            "insert-delete-max", t0,
                            "insertion fails to undo deletion",
                            pi.text(compact=True),
                        )
                    seen.add(d.values)
                if len(seen) != len(upper_set) or len(upper_set) != lower_count:
                    return _done(
                        "insert-delete-max", t0,
                        f"{upper} -> {lower} is not a bijection "
                        f"({len(seen)} images, {lower_count} targets)",
                    )
                for sigma in gen_L(k, lower):
                    u = insert_max(sigma, k)
                    if delete_max(u, k) != sigma:
                        return _done(
                            "insert-delete-max", t0,
                            "deletion fails to undo insertion",
                            sigma.text(compact=True),
                        )
                    checked += 1
    return _done(
        "insert-delete-max", t0,
        f"{checked} round trips (N <= {max_n}, k <= {max_k})",
    )


def check_mixed_blocks(max_k: int = 2, max_n: int = 3) -> Check:
    """All 2^n compositions with parts in {k, k+1} have equal avoiding counts,
    reached constructively by deleting the maxima of the longer blocks."""
    t0 = perf_counter()
    classes = 0
    for k in range(1, max_k + 1):
        for n in range(1, max_n + 1):
            base = (k,) * n
            expected = count_L(k, base)
            for bits in product((0, 1), repeat=n):
                comp = tuple(k + b for b in bits)
                if count_L(k, comp) != expected:
                    return _done(
                        "mixed-block-counts", t0,
                        f"#avoiding({comp}) != #avoiding({base})",
                        f"{count_L(k, comp)} != {expected}",
                    )
                heavy = [i + 1 for i, b in enumerate(bits) if b]
                seen: set[tuple[int, ...]] = set()
                for pi in gen_L(k, comp):
                    img = lower_blocks(pi, k, heavy)
                    if img.comp != base or lis_length(img) > k + 1:
                        return _done(
                            "mixed-block-counts", t0, "chain left the set",
                            pi.text(compact=True),
                        )
                    seen.add(img.values)
                if len(seen) != expected:
                    return _done(
                        "mixed-block-counts", t0,
                        f"chain {comp} -> {base} not bijective "
                        f"({len(seen)} images, {expected} targets)",
                    )
            classes += 1
    return _done(
        "mixed-block-counts", t0,
        f"{classes} mixed families (k <= {max_k}, n <= {max_n})",
    )


# --- concavity suite ---------------------------------------------------------


def check_transfer_injective(max_n: int = 9) -> Check:
    """A unit transfer is collision-free and preserves LIS pointwise."""
    t0 = perf_counter()
    mapped = 0
    for n_total in range(max_n + 1):
        for comp in compositions(n_total):
            eligible = [
                l for l in range(1, len(comp)) if comp[l] >= comp[l - 1] + 2
            ]
            if not eligible:
                continue
            domain = multinomial(comp)
            for l in eligible:
                target = comp[:l - 1] + (comp[l - 1] + 1, comp[l] - 1) + comp[l + 1:]
                seen: set[tuple[int, ...]] = set()
                for values in gen_values(comp):
                    out = _apply_window(values, comp, l, 1)
                    if not _ascending_ok(target, out):
                        return _done(
                            "transfer-injective", t0,
                            f"image invalid for {target}", _fmt(comp, values),
                        )
                    if lis_length(out) != lis_length(values):
                        return _done(
                            "transfer-injective", t0, "LIS not preserved",
                            _fmt(comp, values),
                        )
                    seen.add(out)
                    mapped += 1
                if len(seen) != domain:
                    return _done(
                        "transfer-injective", t0,
                        f"collision transferring {comp} at {l}",
                    )
    return _done(
        "transfer-injective", t0, f"{mapped} transfers (N <= {max_n})"
    )


def check_concavity_counts(max_n: int = 9) -> Check:
    """Exact-LIS counts never drop along a majorization step down."""
    t0 = perf_counter()
    pairs = 0
    for n_total in range(max_n + 1):
        by_len: dict[int, list[Composition]] = {}
        for comp in compositions(n_total):
            by_len.setdefault(len(comp), []).append(comp)
        for comps in by_len.values():
            tallies = {comp: lis_tally(comp) for comp in comps}
            for a in comps:
                for b in comps:
                    if a == b or not majorizes(a, b):
                        continue
                    ta, tb = tallies[a], tallies[b]
                    for h, ca in ta.items():
                        if ca > tb.get(h, 0):
                            return _done(
                                "concavity-counts", t0,
                                f"#exact-LIS-{h}({a}) = {ca} > "
                                f"{tb.get(h, 0)} = #exact-LIS-{h}({b})",
                            )
                    pairs += 1
    return _done(
        "concavity-counts", t0,
        f"{pairs} comparable ordered pairs (N <= {max_n})",
    )


def check_inject_collision_free(max_n: int = 9, ordered_max_n: int = 7) -> Check:
    """The majorization injection never collides.

    Exhausts every comparable ordered pair up to ``ordered_max_n``; above
    that, sorted representatives are exhausted (an ordered pair differs
    from its sorted core only by reorderings, which the swap suite
    verifies bijective).
    """
    t0 = perf_counter()
    mapped = 0
    pairs = 0
    for n_total in range(max_n + 1):
        by_len: dict[int, list[Composition]] = {}
        for comp in compositions(n_total):
            by_len.setdefault(len(comp), []).append(comp)
        for comps in by_len.values():
            for a in comps:
                for b in comps:
                    if sorted(a) == sorted(b) or not majorizes(a, b):
                        continue
                    if n_total > ordered_max_n and (
                        a != tuple(sorted(a)) or b != tuple(sorted(b))
                    ):
                        continue
                    pairs += 1
                    seen: set[tuple[int, ...]] = set()
                    for values in gen_values(a):
                        out = _inject_values(a, values, b)
                        if not _ascending_ok(b, out):
                            return _done(
                                "inject-collision-free", t0,
                                f"image invalid for {b}", _fmt(a, values),
                            )
                        if lis_length(out) != lis_length(values):
                            return _done(
                                "inject-collision-free", t0,
                                "LIS not preserved", _fmt(a, values),
                            )
                        seen.add(out)
                        mapped += 1
                    if len(seen) != multinomial(a):
                        return _done(
                            "inject-collision-free", t0,
                            f"collision injecting {a} -> {b}",
                        )
    return _done(
        "inject-collision-free", t0,
        f"{mapped} injections over {pairs} pairs (ordered pairs to "
        f"N <= {ordered_max_n}, sorted pairs to N <= {max_n})",
    )


# --- catalan suite -----------------------------------------------------------


def _catalan_numbers(up_to: int) -> list[int]:
    # Convolution recurrence, independent of the triangle formulas.
    cats = [1]
    for n in range(up_to):
        cats.append(sum(cats[i] * cats[n - i] for i in range(n + 1)))
    return cats


def check_catalan_forms(max_n: int = 30) -> Check:
    """Both triangle closed forms agree; edges match the Catalan numbers."""
    t0 = perf_counter()
    cats = _catalan_numbers(max_n)
    for n in range(max_n + 1):
        for k in range(n + 1):
            value = catalan_triangle(n, k)  # cross-checks both forms
            if k == 0 and value != 1:
                return _done(
                    "catalan-closed-forms", t0, f"C({n}, 0) = {value} != 1"
                )
        if catalan_triangle(n, n) != cats[n]:
            return _done(
                "catalan-closed-forms", t0,
                f"C({n}, {n}) != Catalan number {cats[n]}",
            )
    return _done(
        "catalan-closed-forms", t0, f"all entries to n = {max_n} agree"
    )


def check_two_block_counts(max_h: int = 7) -> Check:
    """Brute-force two-block exact-LIS counts match the triangle entry,
    and satisfy the deletion recurrence."""
    t0 = perf_counter()
    checked = 0
    for h in range(1, max_h + 1):
        for q in range(1, h + 1):
            for p in range(1, q + 1):
                brute = count_D(h, (p, q))
                if brute != count_d_two(h, p, q):
                    return _done(
                        "two-block-counts", t0,
                        f"#exact-LIS-{h}({p}, {q}) = {brute} != "
                        f"{count_d_two(h, p, q)}",
                    )
                checked += 1
        for m in range(1, h + 1):
            lhs = count_D(h, (h, m))
            rhs = catalan_triangle(h, m - 1) + (
                catalan_triangle(h - 1, m) if m <= h - 1 else 0
            )
            set_rhs = count_D(h, (h - 1, m)) + count_D(h - 1, (h - 1, m))
            if lhs != rhs or lhs != set_rhs:
                return _done(
                    "two-block-counts", t0,
                    f"recurrence fails at (h, m) = ({h}, {m}): "
                    f"{lhs} vs {rhs} vs {set_rhs}",
                )
    return _done(
        "two-block-counts", t0,
        f"{checked} closed-form entries and the recurrence (h <= {max_h})",
    )


def check_catalan_numbers(max_n: int = 6) -> Check:
    """Single-blocks-of-one counts are the Catalan numbers 1, 2, 5, 14, ..."""
    t0 = perf_counter()
    cats = _catalan_numbers(max_n)
    for n in range(1, max_n + 1):
        got = count_L(1, (1,) * n)
        if got != cats[n]:
            return _done(
                "catalan-numbers", t0, f"#avoiding-123(1^{n}) = {got} != {cats[n]}"
            )
    return _done(
        "catalan-numbers", t0,
        f"counts match Catalan numbers for n <= {max_n}",
    )


# --- tableaux suite ----------------------------------------------------------


def check_hook_oracle(max_cells: int = 12) -> Check:
    """Hook-length counts equal backtracking enumeration for every shape."""
    t0 = perf_counter()
    shapes = 0
    for n in range(max_cells + 1):
        for shape in partitions(n):
            if hook_count(shape) != count_standard_brute(shape):
                return _done(
                    "hook-oracle", t0, f"hook count differs at {shape}"
                )
            shapes += 1
    return _done("hook-oracle", t0, f"{shapes} shapes (cells <= {max_cells})")


def check_skew_oracle(max_outer_cells: int = 12, max_skew_cells: int = 10) -> Check:
    """Profile-DP skew counts equal backtracking enumeration."""
    t0 = perf_counter()
    pairs = 0
    for n in range(max_outer_cells + 1):
        for outer in partitions(n):
            for inner in subshapes(outer):
                if n - sum(inner) > max_skew_cells:
                    continue
                if skew_count(outer, inner) != count_standard_brute(outer, inner):
                    return _done(
                        "skew-oracle", t0, f"skew count differs at {outer}/{inner}"
                    )
                pairs += 1
    return _done(
        "skew-oracle", t0,
        f"{pairs} skew shapes (outer cells <= {max_outer_cells}, "
        f"skew cells <= {max_skew_cells})",
    )


def check_skew_equals_hook(max_cells: int = 12) -> Check:
    """With an empty inner shape the skew DP reduces to the hook count."""
    t0 = perf_counter()
    shapes = 0
    for n in range(max_cells + 1):
        for shape in partitions(n):
            if skew_count(shape, ()) != hook_count(shape):
                return _done(
                    "skew-equals-hook", t0, f"counts differ at {shape}"
                )
            shapes += 1
    return _done("skew-equals-hook", t0, f"{shapes} shapes (cells <= {max_cells})")


def check_rect_tail_counts(max_cells: int = 12, max_k: int = 3, max_n: int = 4) -> Check:
    """#avoiding(p, k, ..., k) equals the straight-shape tableau count."""
    t0 = perf_counter()
    cases = 0
    for k in range(1, max_k + 1):
        for n in range(1, max_n + 1):
            for p in range(1, k + 1):
                cells = (n - 1) * (k + 1) + p
                if cells > max_cells:
                    continue
                comp = (p,) + (k,) * (n - 1)
                shape = (k + 1,) * (n - 1) + (p,)
                perm_side = count_L(k, comp)
                tab_side = hook_count(shape)
                if perm_side != tab_side:
                    return _done(
                        "rect-tail-counts", t0,
                        f"#avoiding{comp} = {perm_side} != {tab_side} "
                        f"= #tableaux{shape}",
                    )
                cases += 1
    return _done(
        "rect-tail-counts", t0,
        f"{cases} cases (k <= {max_k}, n <= {max_n}, cells <= {max_cells})",
    )


def check_skew_tail_counts(max_cells: int = 12, max_k: int = 3, max_n: int = 4) -> Check:
    """#avoiding(p, q, k, ..., k) equals the skew tableau count."""
    t0 = perf_counter()
    cases = 0
    for k in range(1, max_k + 1):
        for n in range(2, max_n + 1):
            for q in range(1, k + 1):
                for p in range(1, q + 1):
                    cells = p + q + (n - 2) * (k + 1)
                    if cells > max_cells:
                        continue
                    comp = (p, q) + (k,) * (n - 2)
                    outer = (k + 1,) * (n - 1) + (p,)
                    inner = (k + 1 - q,)
                    perm_side = count_L(k, comp)
                    tab_side = skew_count(outer, inner)
                    if perm_side != tab_side:
                        return _done(
                            "skew-tail-counts", t0,
                            f"#avoiding{comp} = {perm_side} != {tab_side} "
                            f"= #tableaux{outer}/{inner}",
                        )
                    cases += 1
    return _done(
        "skew-tail-counts", t0,
        f"{cases} cases (k <= {max_k}, n <= {max_n}, cells <= {max_cells})",
    )


def check_tableau_roundtrip(max_k: int = 2, max_n: int = 3, max_cells: int = 10) -> Check:
    """Block-row maps round-trip and hit every standard filling once."""
    t0 = perf_counter()
    checked = 0
    for k in range(1, max_k + 1):
        for n in range(1, max_n + 1):
            for p in range(1, k + 2):
                comp = (p,) + (k + 1,) * (n - 1)
                if sum(comp) > max_cells:
                    continue
                shape = (k + 1,) * (n - 1) + (p,)
                images: set[tuple] = set()
                for pi in gen_L(k, comp):
                    t = perm_to_tableau(pi, k)
                    if tableau_to_perm(t, k) != pi:
                        return _done(
                            "tableau-roundtrip", t0, "straight round trip failed",
                            pi.text(compact=True),
                        )
                    images.add(t.rows)
                    checked += 1
                if len(images) != hook_count(shape):
                    return _done(
                        "tableau-roundtrip", t0,
                        f"straight map over {comp} not onto "
                        f"({len(images)} images, {hook_count(shape)} fillings)",
                    )
            if n < 2:
                continue
            for p in range(1, k + 2):
                for q in range(1, k + 2):
                    comp = (p,) + (k + 1,) * (n - 2) + (q,)
                    if sum(comp) > max_cells:
                        continue
                    outer = (k + 1,) * (n - 1) + (p,)
                    inner = (k + 1 - q,) if q <= k else ()
                    images = set()
                    for pi in gen_L(k, comp):
                        t = perm_to_skew_tableau(pi, k)
                        if skew_tableau_to_perm(t, k) != pi:
                            return _done(
                                "tableau-roundtrip", t0, "skew round trip failed",
                                pi.text(compact=True),
                            )
                        images.add(t.rows)
                        checked += 1
                    if len(images) != skew_count(outer, inner):
                        return _done(
                            "tableau-roundtrip", t0,
                            f"skew map over {comp} not onto "
                            f"({len(images)} images, "
                            f"{skew_count(outer, inner)} fillings)",
                        )
    return _done(
        "tableau-roundtrip", t0,
        f"{checked} round trips (k <= {max_k}, n <= {max_n}, "
        f"cells <= {max_cells})",
    )


def check_standard_iff_avoiding(max_k: int = 2, max_n: int = 3, max_cells: int = 9) -> Check:
    """The block-row array is standard exactly when the input avoids the
    pattern; non-avoiding inputs are rejected by the maps."""
    t0 = perf_counter()
    checked = 0
    for k in range(1, max_k + 1):
        for n in range(1, max_n + 1):
            for p in range(1, k + 2):
                for q in range(1, k + 2) if n >= 2 else [None]:
                    if q is None:
                        comp: Composition = (p,) + (k + 1,) * (n - 1)
                        outer = (k + 1,) * (n - 1) + (p,)
                        inner: Composition = ()
                    else:
                        comp = (p,) + (k + 1,) * (n - 2) + (q,)
                        outer = (k + 1,) * (n - 1) + (p,)
                        inner = (k + 1 - q,) if q <= k else ()
                    if sum(comp) > max_cells:
                        continue
                    for values in gen_values(comp):
                        pi = BlockPermutation._trusted(comp, values)
                        array = Tableau(outer, inner, tuple(reversed(pi.blocks())))
                        avoiding = lis_length(values) <= k + 1
                        if array.is_standard() != avoiding:
                            return _done(
                                "standard-iff-avoiding", t0,
                                "column monotonicity disagrees with avoidance",
                                pi.text(compact=True),
                            )
                        if not avoiding:
                            try:
                                if q is None:
                                    perm_to_tableau(pi, k)
                                else:
                                    perm_to_skew_tableau(pi, k)
                                return _done(
                                    "standard-iff-avoiding", t0,
                                    "non-avoiding input was not rejected",
                                    pi.text(compact=True),
                                )
                            except DomainError:
                                pass
                        checked += 1
    return _done(
        "standard-iff-avoiding", t0,
        f"{checked} arrays (k <= {max_k}, n <= {max_n}, cells <= {max_cells})",
    )


def check_rect_dual_counts(max_k: int = 2, max_cells: int = 10) -> Check:
    """Both all-k and all-(k+1) compositions count the same rectangle."""
    t0 = perf_counter()
    cases = 0
    for k in range(1, max_k + 1):
        n = 1
        while n * (k + 1) <= max_cells:
            shape = (k + 1,) * n
            expected = hook_count(shape)
            short = count_L(k, (k,) * n)
            tall = count_L(k, (k + 1,) * n)
            if short != expected or tall != expected:
                return _done(
                    "rect-dual-counts", t0,
                    f"k = {k}, n = {n}: {short} / {tall} vs rectangle {expected}",
                )
            cases += 1
            n += 1
    return _done(
        "rect-dual-counts", t0,
        f"{cases} rectangle families (k <= {max_k}, cells <= {max_cells})",
    )


# --- suite wiring ------------------------------------------------------------


def run_suite(suite: str, max_size: int = 9) -> SuiteReport:
    """Run a named suite (or ``all``) scaled by ``max_size``."""
    if max_size < 0:
        raise DomainError(f"max size must be nonnegative, got {max_size}")
    if suite != "all" and suite not in SUITE_NAMES:
        raise DomainError(
            f"unknown suite {suite!r}; choose from {('all',) + SUITE_NAMES}"
        )
    ms = max_size
    cells = min(12, ms + 3)
    report = SuiteReport(suite)
    if suite in ("all", "w-v"):
        report.checks += [
            check_wv_inverse(max_sum=ms),
            check_ridge_shift(max_sum=min(ms, 9)),
            check_interval_lis(max_sum=min(ms, 9)),
        ]
    if suite in ("all", "swap"):
        report.checks += [
            check_swap_involution(max_n=ms),
            check_reorder_bijection(max_n=ms),
            check_symmetry_counts(max_n=ms),
            check_insert_delete(max_n=ms),
            check_mixed_blocks(),
        ]
    if suite in ("all", "concavity"):
        report.checks += [
            check_transfer_injective(max_n=ms),
            check_concavity_counts(max_n=ms),
            check_inject_collision_free(max_n=ms, ordered_max_n=min(ms, 7)),
        ]
    if suite in ("all", "catalan"):
        report.checks += [
            check_catalan_forms(),
            check_two_block_counts(max_h=min(7, ms)),
            check_catalan_numbers(),
        ]
    if suite in ("all", "tableaux"):
        report.checks += [
            check_hook_oracle(max_cells=cells),
            check_skew_oracle(max_outer_cells=cells, max_skew_cells=min(10, cells)),
            check_skew_equals_hook(max_cells=cells),
            check_rect_tail_counts(max_cells=cells),
            check_skew_tail_counts(max_cells=cells),
            check_tableau_roundtrip(max_cells=min(10, cells)),
            check_standard_iff_avoiding(max_cells=min(9, cells)),
            check_rect_dual_counts(max_cells=min(10, cells)),
        ]
    return report
