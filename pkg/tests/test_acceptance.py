"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Criteria 3-10 delegate to the exhaustive checks in ``blockperm.verify``
at their stated scales, so a green run here also means
``blockperm verify --suite all --max-size 9`` exits 0 (the CLI runs the
same checks).  Run with ``pytest tests/test_acceptance.py -v -s`` to see
the lines and per-criterion timings.
"""

import json

import blockperm as bp
from blockperm.cli import main as cli_main
from blockperm.verify import (
    check_catalan_numbers,
    check_concavity_counts,
    check_hook_oracle,
    check_inject_collision_free,
    check_interval_lis,
    check_mixed_blocks,
    check_rect_tail_counts,
    check_reorder_bijection,
    check_skew_equals_hook,
    check_skew_oracle,
    check_skew_tail_counts,
    check_symmetry_counts,
    check_two_block_counts,
    check_wv_inverse,
)


def report(criterion, description, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {description}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


def from_checks(criterion, description, *checks):
    ok = all(c.ok for c in checks)
    detail = "; ".join(
        c.detail if c.ok else f"{c.name}: {c.detail} [{c.counterexample}]"
        for c in checks
    )
    seconds = round(sum(c.seconds for c in checks), 1)
    report(criterion, description, ok, f"{detail}; {seconds}s")


def test_criterion_01_map_w_golden(capsys):
    code = cli_main(["map", "w", "--perm", "236|14578"])
    out = capsys.readouterr().out
    with capsys.disabled():
        report(1, "map w sends 236|14578 to 2346|1578",
               code == 0 and out == "2346|1578\n", out.strip())


def test_criterion_02_swap_chain_golden(capsys):
    code = cli_main(["map", "swap", "--index", "2", "--perm", "1|37|2458|6"])
    plain = capsys.readouterr().out
    code2 = cli_main([
        "map", "swap", "--index", "2", "--perm", "1|37|2458|6",
        "--trace", "--json",
    ])
    body = json.loads(capsys.readouterr().out)
    ok = (
        code == 0
        and plain == "1|3478|25|6\n"
        and code2 == 0
        and body["perm"] == "1|3478|25|6"
        and body["trace"][0]["after"] == "1|347|258|6"
    )
    with capsys.disabled():
        report(2, "swap at index 2 gives 1|3478|25|6 via 1|347|258|6", ok,
               f"{plain.strip()}; intermediate {body['trace'][0]['after']}")


def test_criterion_03_inverse_property():
    from_checks(3, "forward/reverse moves invert (p+q <= 10, h <= 6)",
                check_wv_inverse(max_sum=10, max_h=6))


def test_criterion_04_interval_lis():
    from_checks(4, "interval LIS preserved by the forward move (p+q <= 9)",
                check_interval_lis(max_sum=9))


def test_criterion_05_symmetry():
    from_checks(
        5,
        "counts symmetric and reordering bijective (N <= 9, parts <= 6)",
        check_symmetry_counts(max_n=9, max_part=6),
        check_reorder_bijection(max_n=9, max_part=6),
    )


def test_criterion_06_schur_concavity():
    from_checks(
        6,
        "counts Schur-concave and injection collision-free (N <= 9)",
        check_concavity_counts(max_n=9),
        check_inject_collision_free(max_n=9, ordered_max_n=7),
    )


def test_criterion_07_catalan_triangle():
    from_checks(
        7,
        "two-block counts equal the triangle entry and recurrence (h <= 7)",
        check_two_block_counts(max_h=7),
    )


def test_criterion_08_catalan_numbers():
    expected = [1, 2, 5, 14, 42, 132]
    got = [bp.count_L(1, (1,) * n) for n in range(1, 7)]
    ok = got == expected and check_catalan_numbers(max_n=6).ok
    report(8, "single-cell compositions count the Catalan numbers", ok,
           f"{got}")


def test_criterion_09_mixed_block_equivalence():
    from_checks(
        9,
        "mixed k/k+1 compositions all count the same, constructively "
        "(k <= 2, n <= 3)",
        check_mixed_blocks(max_k=2, max_n=3),
    )


def test_criterion_10_tableau_count_equalities():
    from_checks(
        10,
        "tableau count equalities at <= 12 cells with backtracking oracle",
        check_hook_oracle(max_cells=12),
        check_skew_oracle(max_outer_cells=12, max_skew_cells=10),
        check_skew_equals_hook(max_cells=12),
        check_rect_tail_counts(max_cells=12),
        check_skew_tail_counts(max_cells=12),
    )


def test_criterion_11_large_skew_recorded():
    # The permutation side (27 values, ~1e15 ascending permutations) is not
    # desk-enumerable; the exact skew count is recorded instead, and the
    # count identity itself is verified at the scaled-down ranges of
    # criterion 10.
    value = bp.skew_count((7, 7, 7, 7, 4), (2,))
    report(
        11,
        "30-cell skew count recorded exactly",
        value == 27_754_983_956_700,
        f"standard fillings of (7,7,7,7,4)/(2): {value}",
    )
