"""Formula trees over the gates {+, *, ^} with all-1 leaves.

A tree is either the leaf ``1`` (the int) or a tuple ``(gate, left, right)``
with gate one of ``'+'``, ``'*'``, ``'^'``.  For ``'^'`` the left child is the
base.  This mirrors the bracket notation used throughout: ``(+ 1 (+ 1 1))``
is ``('+', 1, ('+', 1, 1))``.

Size is the node count (always odd, 2*leaves - 1), depth the longest
root-to-leaf path.  A tree is *strict* when no subterm is 1*f, f*1, f^1 or
1^f; those shapes waste gates without changing the value.
"""

from __future__ import annotations

from .errors import DomainError, MalformedString

LEAF = 1
ADD, MUL, POW = "+", "*", "^"
GATES = (ADD, MUL, POW)

FormulaTree = object  # leaf int 1 | tuple (gate, FormulaTree, FormulaTree)


def is_leaf(tree) -> bool:
    return tree == 1


def evaluate(tree) -> int:
    """Value of the formula: exact big-int arithmetic over the gates."""
    if tree == 1:
        return 1
    gate, left, right = tree
    a, b = evaluate(left), evaluate(right)
    if gate == ADD:
        return a + b
    if gate == MUL:
        return a * b
    if gate == POW:
        return a ** b
    raise DomainError(f"unknown gate {gate!r}")


def size(tree) -> int:
    """Node count; odd, equal to 2*leaf_count(tree) - 1."""
    if tree == 1:
        return 1
    return 1 + size(tree[1]) + size(tree[2])


def depth(tree) -> int:
    """Longest root-to-leaf path; 0 for the bare leaf."""
    if tree == 1:
        return 0
    return 1 + max(depth(tree[1]), depth(tree[2]))


def leaf_count(tree) -> int:
    if tree == 1:
        return 1
    return leaf_count(tree[1]) + leaf_count(tree[2])


def is_strict(tree) -> bool:
    """True when no subterm is 1*f, f*1, f^1 or 1^f."""
    if tree == 1:
        return True
    gate, left, right = tree
    if gate in (MUL, POW) and (left == 1 or right == 1):
        return False
    return is_strict(left) and is_strict(right)


def validate(tree) -> None:
    """Raise DomainError unless tree is a well-formed formula tree."""
    if tree == 1:
        return
    if (
        not isinstance(tree, tuple)
        or len(tree) != 3
        or tree[0] not in GATES
    ):
        raise DomainError(f"not a formula tree: {tree!r}")
    validate(tree[1])
    validate(tree[2])


def to_prefix(tree) -> str:
    """Preorder string over the alphabet {1, +, *, ^}.

    to_prefix(('+', 1, 1)) == '+11'
    """
    parts = []

    def walk(t):
        if t == 1:
            parts.append("1")
        else:
            parts.append(t[0])
            walk(t[1])
            walk(t[2])

    walk(tree)
    return "".join(parts)


def to_postfix(tree) -> str:
    """Mirror-postorder string; always the reverse of to_prefix(tree)."""
    return to_prefix(tree)[::-1]


def parse_prefix(text: str):
    """Inverse of to_prefix.  Raises MalformedString on bad input."""
    pos = 0
    n = len(text)

    def parse():
        nonlocal pos
        if pos >= n:
            raise MalformedString(f"unexpected end of input in {text!r}")
        ch = text[pos]
        pos += 1
        if ch == "1":
            return 1
        if ch in GATES:
            left = parse()
            right = parse()
            return (ch, left, right)
        raise MalformedString(f"unknown symbol {ch!r} at position {pos - 1}")

    tree = parse()
    if pos != n:
        raise MalformedString(f"{n - pos} leftover token(s) in {text!r}")
    return tree


def parse_postfix(text: str):
    """Inverse of to_postfix: parse the reversed string as prefix."""
    return parse_prefix(text[::-1])


def to_brackets(tree):
    """Nested-list form for JSON: ('+', 1, 1) -> ['+', 1, 1]."""
    if tree == 1:
        return 1
    return [tree[0], to_brackets(tree[1]), to_brackets(tree[2])]


def from_brackets(obj):
    """Inverse of to_brackets; accepts lists or tuples, validates shape."""
    if obj == 1:
        return 1
    if isinstance(obj, (list, tuple)) and len(obj) == 3 and obj[0] in GATES:
        return (obj[0], from_brackets(obj[1]), from_brackets(obj[2]))
    raise DomainError(f"not a bracket-form tree: {obj!r}")
