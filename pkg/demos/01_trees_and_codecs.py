"""Formula trees and their string codecs.

A formula here is a binary tree whose leaves are the constant 1 and whose
internal nodes are one of the gates +, *, ^.  Trees are plain nested tuples,
so they print, hash, and compare with no ceremony.
"""

from formula_forge import (
    depth,
    evaluate,
    from_brackets,
    is_strict,
    parse_postfix,
    parse_prefix,
    size,
    to_brackets,
    to_postfix,
    to_prefix,
)

# 6 = 2 * 3, written as (1+1) * (1 + (1+1))
t = ("*", ("+", 1, 1), ("+", 1, ("+", 1, 1)))

print("tree:     ", t)
print("value:    ", evaluate(t))
print("size:     ", size(t), "nodes")
print("depth:    ", depth(t))
print("strict:   ", is_strict(t))
print()

# Three interchangeable text forms.
pre = to_prefix(t)
post = to_postfix(t)
br = to_brackets(t)
print("prefix:   ", pre)
print("postfix:  ", post)
print("brackets: ", br)
print()

# Round-trips are exact, and postfix is literally reversed prefix.
assert parse_prefix(pre) == t
assert parse_postfix(post) == t
assert from_brackets(br) == t
assert post == pre[::-1]
print("round-trips hold; postfix == reversed prefix")
print()

# Strictness rules out the wasteful shapes 1*f, f*1, f^1, 1^f.
wasteful = ("*", 1, ("+", 1, 1))
print(wasteful, "evaluates to", evaluate(wasteful), "but is_strict:", is_strict(wasteful))

# A power tower: ((1+1)^(1+1))^(1+1) = 16
tower = ("^", ("^", ("+", 1, 1), ("+", 1, 1)), ("+", 1, 1))
print(to_prefix(tower), "=", evaluate(tower))
