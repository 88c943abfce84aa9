import pytest

import blockperm as bp


def test_as_shape_validation():
    assert bp.as_shape([3, 2, 2]) == (3, 2, 2)
    assert bp.as_shape([]) == ()
    with pytest.raises(bp.DomainError):
        bp.as_shape([2, 3])
    with pytest.raises(bp.DomainError):
        bp.as_shape([2, 0])


def test_hook_count_golden():
    assert bp.hook_count((2, 2)) == 2
    assert bp.hook_count((7,)) == 1
    assert bp.hook_count((2, 1)) == 2
    assert bp.hook_count((2, 2, 2)) == 5
    assert bp.hook_count(()) == 1
    with pytest.raises(bp.SizeLimitError):
        bp.hook_count((65,))


def test_hook_matches_backtracking_small():
    for n in range(9):
        for shape in bp.partitions(n):
            assert bp.hook_count(shape) == bp.count_standard_brute(shape)


def test_skew_count_golden():
    assert bp.skew_count((2, 1), (1,)) == 2
    assert bp.skew_count((3, 2), (3, 2)) == 1  # empty filling
    assert bp.skew_count((2, 2)) == bp.hook_count((2, 2))
    with pytest.raises(bp.DomainError):
        bp.skew_count((2, 2), (3,))


def test_skew_recorded_large_value():
    # Exact count for the 30-cell skew shape; far beyond enumeration reach.
    assert bp.skew_count((7, 7, 7, 7, 4), (2,)) == 27_754_983_956_700


def test_skew_matches_backtracking_small():
    for n in range(8):
        for outer in bp.partitions(n):
            for inner in bp.subshapes(outer):
                assert bp.skew_count(outer, inner) == bp.count_standard_brute(
                    outer, inner
                )


def test_skew_equals_avoiding_count():
    # both sides computed independently
    assert bp.count_L(2, (1, 2, 2)) == 21 == bp.skew_count((3, 3, 1), (1,))


def test_enumerate_standard_golden():
    fillings = sorted(t.rows for t in bp.enumerate_standard((2, 2)))
    assert fillings == [((1, 2), (3, 4)), ((1, 3), (2, 4))]
    skew = sorted(t.rows for t in bp.enumerate_standard((2, 1), (1,)))
    assert skew == [((1,), (2,)), ((2,), (1,))]


def test_partitions_and_subshapes():
    assert list(bp.partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    subs = set(bp.subshapes((2, 1)))
    assert subs == {(), (1,), (2,), (1, 1), (2, 1)}


def test_tableau_validation():
    t = bp.Tableau((2, 2), (), ((1, 2), (3, 4)))
    assert t.is_standard() and t.size == 4
    with pytest.raises(bp.DomainError):
        bp.Tableau((2, 2), (), ((1, 2, 3), (4,)))  # row lengths
    with pytest.raises(bp.DomainError):
        bp.Tableau((2,), (), ((1, 3),))  # values not 1..m
    non_standard = bp.Tableau((2, 1), (), ((2, 3), (1,)))
    assert not non_standard.is_standard()


def test_tableau_render():
    t = bp.Tableau((2, 1), (1,), ((2,), (1,)))
    assert t.render() == ". 2\n1"
    assert bp.render_shape((3, 2), (1,)) == ". # #\n# #"


def test_cell_count():
    assert bp.cell_count((7, 7, 7, 7, 4), (2,)) == 30
    assert bp.cell_count((3, 2)) == 5


# --- block-row correspondence ---------------------------------------------------


def test_perm_to_tableau_golden():
    t = bp.perm_to_tableau(bp.parse("3|12"), 1)
    assert t.outer == (2, 1) and t.rows == ((1, 2), (3,))
    assert t.is_standard()
    t = bp.perm_to_tableau(bp.parse("2|13"), 1)
    assert t.rows == ((1, 3), (2,))
    assert bp.tableau_to_perm(t, 1) == bp.parse("2|13")


def test_perm_to_tableau_rejects_pattern():
    # 1|23 contains 123, so its array has a decreasing column and the
    # construction must reject it.
    pi = bp.parse("1|23")
    assert bp.lis_length(pi) == 3
    array = bp.Tableau((2, 1), (), tuple(reversed(pi.blocks())))
    assert not array.is_standard()
    with pytest.raises(bp.DomainError):
        bp.perm_to_tableau(pi, 1)


def test_perm_to_tableau_rejects_wrong_shape():
    with pytest.raises(bp.DomainError):
        bp.perm_to_tableau(bp.parse("12|34"), 2)  # tail block not k+1
    with pytest.raises(bp.DomainError):
        bp.tableau_to_perm(bp.Tableau((2, 1), (), ((2, 3), (1,))), 1)


def test_tableau_round_trip_exhaustive():
    count = 0
    for pi in bp.gen_L(1, (1, 2, 2)):
        t = bp.perm_to_tableau(pi, 1)
        assert bp.tableau_to_perm(t, 1) == pi
        count += 1
    assert count == bp.hook_count((2, 2, 1))


def test_skew_tableau_golden():
    # the two avoiding two-block permutations on (1, 1) at k = 1
    images = set()
    for pi in bp.gen_L(1, (1, 1)):
        t = bp.perm_to_skew_tableau(pi, 1)
        assert t.outer == (2, 1) and t.inner == (1,)
        assert bp.skew_tableau_to_perm(t, 1) == pi
        images.add(t.rows)
    assert len(images) == 2 == bp.skew_count((2, 1), (1,))


def test_skew_reduces_to_straight_when_full():
    for pi in bp.gen_L(1, (1, 2)):
        skew = bp.perm_to_skew_tableau(pi, 1)  # q = k+1: offset 0
        straight = bp.perm_to_tableau(pi, 1)
        assert skew == straight


def test_skew_tableau_round_trip():
    count = 0
    for pi in bp.gen_L(2, (1, 3, 2)):
        t = bp.perm_to_skew_tableau(pi, 2)
        assert t.outer == (3, 3, 1) and t.inner == (1,)
        assert bp.skew_tableau_to_perm(t, 2) == pi
        count += 1
    assert count == bp.skew_count((3, 3, 1), (1,))


def test_rectangle_dual_counts_small():
    # all-k and all-(k+1) compositions both count the same rectangle
    assert bp.count_L(1, (1, 1, 1)) == bp.count_L(1, (2, 2, 2)) == bp.hook_count((2, 2, 2))
    assert bp.count_L(2, (2, 2)) == bp.count_L(2, (3, 3)) == bp.hook_count((3, 3))
