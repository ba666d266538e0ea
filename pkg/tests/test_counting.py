import pytest

from conftest import brute_trees, catalan
from formula_forge import (
    CountTable,
    DomainError,
    count_add_lop,
    count_add_only,
    count_am,
    count_ame,
)
from formula_forge.counting import exact_root, exponent_candidates, mid_divisors


def test_goldens():
    assert count_add_only(3) == 2
    assert count_add_lop(3) == 1
    assert count_am(4, "+") == 5
    assert count_am(4, "*") == 1
    assert count_am(6) == 52
    assert count_ame(4, "^") == 1
    assert count_ame(8, "^") == 2
    assert [count_ame(n) for n in range(1, 10)] == [1, 1, 2, 7, 18, 58, 180, 613, 2076]


def test_add_only_is_catalan():
    for n in range(1, 13):
        assert count_add_only(n) == catalan(n - 1)


def test_counts_match_structural_generation():
    for n in range(1, 9):
        assert count_add_only(n) == len(brute_trees(n, "+"))
        assert count_am(n) == len(brute_trees(n, "+*"))
        assert count_ame(n) == len(brute_trees(n, "+*^"))


def test_lop_matches_filtered_generation():
    from formula_forge.trees import evaluate

    def lop_ok(t):
        if t == 1:
            return True
        return (
            evaluate(t[1]) >= evaluate(t[2]) and lop_ok(t[1]) and lop_ok(t[2])
        )

    for n in range(1, 11):
        expected = sum(1 for t in brute_trees(n, "+") if lop_ok(t))
        assert count_add_lop(n) == expected


def test_root_split_sums():
    for n in range(2, 30):
        assert count_am(n) == count_am(n, "+") + count_am(n, "*")
        assert count_ame(n) == sum(count_ame(n, g) for g in "+*^")


def test_bad_arguments():
    for bad in [0, -3, 2.5, True, "6"]:
        with pytest.raises(DomainError):
            count_ame(bad)
    with pytest.raises(DomainError):
        count_am(6, "^")
    with pytest.raises(DomainError):
        count_ame(6, "%")


def test_fresh_table_matches_default():
    t = CountTable()
    assert t.ame(20) == count_ame(20)
    assert t.am(20, "*") == count_am(20, "*")
    assert t.add_only(15) == count_add_only(15)
    assert t.add_lop(15) == count_add_lop(15)


def test_entries_absorb_round_trip():
    src = CountTable()
    src.ame(12)
    src.add_only(12)
    dst = CountTable()
    dst.absorb(src.entries())
    assert dst.entries() == src.entries()
    assert dst.ame(12) == src.ame(12)


def test_helper_functions():
    assert exact_root(64, 2) == 8
    assert exact_root(64, 3) == 4
    assert exact_root(64, 5) is None
    assert exact_root(1, 7) == 1
    assert mid_divisors(12) == [2, 3, 4, 6]
    assert mid_divisors(4) == [2]
    assert mid_divisors(7) == []
    assert list(exponent_candidates(16)) == [(2, 4), (4, 2)]
    assert list(exponent_candidates(8)) == [(3, 2)]
    assert list(exponent_candidates(6)) == []


def test_large_counts_are_big_ints():
    c = count_ame(120)
    assert c > 10**69
    assert isinstance(c, int)
