import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import blockperm as bp


def test_gen_ascending_lex_order():
    perms = [pi.values for pi in bp.gen_ascending((2, 2))]
    assert perms == [
        (1, 2, 3, 4),
        (1, 3, 2, 4),
        (1, 4, 2, 3),
        (2, 3, 1, 4),
        (2, 4, 1, 3),
        (3, 4, 1, 2),
    ]
    assert len(perms) == bp.multinomial((2, 2)) == 6


def test_gen_ascending_trivial():
    assert [pi.text() for pi in bp.gen_ascending((1,))] == ["1"]
    only = list(bp.gen_ascending((0, 2)))
    assert only == [bp.parse("|12")]
    assert list(bp.gen_ascending(())) == [bp.BlockPermutation((), ())]


@settings(deadline=None)
@given(st.lists(st.integers(0, 4), max_size=4))
def test_gen_ascending_count_is_multinomial(comp):
    comp = tuple(comp)
    if sum(comp) > 8:
        return
    assert sum(1 for _ in bp.gen_ascending(comp)) == bp.multinomial(comp)


def test_size_cap():
    with pytest.raises(bp.SizeLimitError):
        list(bp.gen_ascending((15,)))
    assert sum(1 for _ in bp.gen_ascending((15,), cap=15)) == 1
    with pytest.raises(bp.SizeLimitError):
        bp.count_L(1, (8, 8))


def test_gen_d_golden():
    found = {pi.text(compact=True) for pi in bp.gen_D(3, (2, 2))}
    assert found == {"13|24", "14|23", "23|14"}


def test_gen_l_golden():
    assert sum(1 for _ in bp.gen_L(1, (1, 1, 1))) == 5
    assert list(bp.gen_L(1, (3,))) == []  # max part >= k+2
    assert [pi.text() for pi in bp.gen_L(0, (1, 1))] == ["2|1"]


def test_gen_filters_agree_with_classify():
    for pi in bp.gen_L(2, (2, 2, 1)):
        assert bp.classify(pi, 2) == "avoids"
    for h in range(1, 6):
        for pi in bp.gen_D(h, (2, 3)):
            assert bp.lis_length(pi) == h


def test_count_golden():
    assert bp.count_L(1, (1, 1, 1, 1)) == 14
    assert bp.count_L(1, (2, 2)) == 2
    assert bp.count_D(6, (3, 5)) == 20


def test_tally_partitions_everything():
    for comp in [(2, 2), (1, 3, 1), (2, 0, 2), (4,)]:
        tally = bp.lis_tally(comp)
        assert sum(tally.values()) == bp.multinomial(comp)
        assert all(h >= max(comp, default=0) for h in tally)


def test_catalan_triangle_golden():
    assert bp.catalan_triangle(3, 1) == 3
    assert bp.catalan_triangle(4, 4) == 14
    assert all(bp.catalan_triangle(n, 0) == 1 for n in range(12))
    with pytest.raises(bp.DomainError):
        bp.catalan_triangle(2, 3)
    with pytest.raises(bp.DomainError):
        bp.catalan_triangle(-1, 0)


def test_count_d_two_golden():
    assert bp.count_d_two(3, 2, 2) == 3 == bp.count_D(3, (2, 2))
    assert bp.count_d_two(5, 2, 2) == 0
    # the closed form at (6, 3, 5): cross-checked against brute force
    assert bp.count_d_two(6, 3, 5) == 20 == bp.count_D(6, (3, 5))
    assert bp.count_d_two(3, 0, 3) == 1  # empty first block, fully increasing
    assert bp.count_d_two(3, 4, 1) == 0  # block longer than h
    with pytest.raises(bp.DomainError):
        bp.count_d_two(0, 1, 1)
    with pytest.raises(bp.DomainError):
        bp.count_d_two(3, 0, 3, strict=True)


def test_two_block_recurrence_small():
    for h in range(1, 6):
        for m in range(1, h + 1):
            lhs = bp.count_D(h, (h, m))
            rhs = bp.count_D(h, (h - 1, m)) + bp.count_D(h - 1, (h - 1, m))
            assert lhs == rhs == bp.count_d_two(h, h, m)


def test_compositions_helper():
    assert list(bp.compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert list(bp.compositions(0)) == [()]
    assert list(bp.compositions(3, max_part=2)) == [(1, 1, 1), (1, 2), (2, 1)]


def test_count_table():
    table = bp.CountTable.for_composition((2, 2))
    table.check()
    rows = {(r["param"]): r["count"] for r in table.to_rows()}
    assert rows["h=2"] == 2 and rows["h=3"] == 3 and rows["h=4"] == 1
    assert rows["k=1"] == 2 and rows["k=2"] == 5 and rows["k=3"] == 6
    csv_text = table.to_csv()
    assert csv_text.splitlines()[0] == "comp,param,count"
    assert '"2,2",h=3,3' in csv_text
