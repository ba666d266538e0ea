import pytest

from formula_forge import (
    DomainError,
    MalformedString,
    depth,
    evaluate,
    from_brackets,
    is_leaf,
    is_strict,
    leaf_count,
    parse_postfix,
    parse_prefix,
    size,
    to_brackets,
    to_postfix,
    to_prefix,
    validate,
)
from formula_forge.enumeration import enumerate_ame

T6 = ("*", ("+", 1, 1), ("+", 1, ("+", 1, 1)))


def test_evaluate():
    assert evaluate(1) == 1
    assert evaluate(("+", 1, 1)) == 2
    assert evaluate(T6) == 6
    assert evaluate(("^", ("+", 1, 1), ("+", 1, ("+", 1, 1)))) == 8


def test_size_depth_leaves():
    assert size(1) == 1 and depth(1) == 0 and leaf_count(1) == 1
    assert size(T6) == 9
    assert depth(T6) == 3
    assert leaf_count(T6) == 5
    assert size(T6) == 2 * leaf_count(T6) - 1


def test_strictness():
    assert is_strict(T6)
    assert not is_strict(("*", 1, ("+", 1, 1)))
    assert not is_strict(("*", ("+", 1, 1), 1))
    assert not is_strict(("^", ("+", 1, 1), 1))
    assert not is_strict(("^", 1, ("+", 1, 1)))
    assert is_strict(("+", 1, ("+", 1, 1)))


def test_validate_rejects_garbage():
    with pytest.raises(DomainError):
        validate(("?", 1, 1))
    with pytest.raises(DomainError):
        validate(("+", 1))
    with pytest.raises(DomainError):
        validate(("+", 0, 1))
    validate(T6)


def test_prefix_postfix_goldens():
    assert to_prefix(("+", 1, 1)) == "+11"
    assert to_postfix(("+", 1, 1)) == "11+"
    assert to_prefix(("+", 1, ("+", 1, 1))) == "+1+11"
    assert to_postfix(("+", 1, ("+", 1, 1))) == "11+1+"
    assert to_prefix(T6) == "*+11+1+11"


def test_postfix_is_reversed_prefix():
    for n in range(1, 9):
        for t in enumerate_ame(n):
            assert to_postfix(t) == to_prefix(t)[::-1]


def test_round_trips():
    for n in range(1, 9):
        for t in enumerate_ame(n):
            assert parse_prefix(to_prefix(t)) == t
            assert parse_postfix(to_postfix(t)) == t
            assert from_brackets(to_brackets(t)) == t


def test_parse_prefix_goldens():
    assert parse_prefix("+1+11") == ("+", 1, ("+", 1, 1))
    assert parse_prefix("1") == 1
    # mirror reading: the postfix string is consumed right to left
    assert parse_postfix("11+1+") == ("+", 1, ("+", 1, 1))
    assert parse_postfix("111++") == ("+", ("+", 1, 1), 1)


def test_parse_errors():
    for bad in ["", "+1", "+x1", "11", "+111", "*11+", "^"]:
        with pytest.raises(MalformedString):
            parse_prefix(bad)
    for bad in ["", "1+", "+11"]:
        with pytest.raises(MalformedString):
            parse_postfix(bad)
    assert parse_postfix("11*") == ("*", 1, 1)  # parseable, just not strict


def test_brackets():
    assert to_brackets(T6) == ["*", ["+", 1, 1], ["+", 1, ["+", 1, 1]]]
    assert from_brackets(1) == 1
    with pytest.raises(DomainError):
        from_brackets(["+", 1])
    with pytest.raises(DomainError):
        from_brackets(["&", 1, 1])


def test_leaf_helpers():
    assert is_leaf(1)
    assert not is_leaf(("+", 1, 1))
