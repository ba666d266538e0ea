"""How many formulas compute n?

Four families, by allowed gates and conventions:

    a    additions only
    lop  additions only, left operand >= right (canonical up to symmetry)
    am   additions and multiplications, strict
    ame  additions, multiplications, exact powers, strict

Counting is exact big-integer work; enumeration streams the same trees the
counts promise, in a fixed order.
"""

from math import comb

from formula_forge import (
    count_add_lop,
    count_add_only,
    count_am,
    count_ame,
    enumerate_ame,
    to_prefix,
)

print("n:         ", "  ".join(f"{n:>8}" for n in range(1, 11)))
print("a (adds):  ", "  ".join(f"{count_add_only(n):>8}" for n in range(1, 11)))
print("lop:       ", "  ".join(f"{count_add_lop(n):>8}" for n in range(1, 11)))
print("am:        ", "  ".join(f"{count_am(n):>8}" for n in range(1, 11)))
print("ame:       ", "  ".join(f"{count_ame(n):>8}" for n in range(1, 11)))
print()

# Addition-only counts are the Catalan numbers in disguise: a value-n tree
# is a full binary tree with n leaves.
for n in (5, 9):
    catalan = comb(2 * (n - 1), n - 1) // n
    print(f"count_add_only({n}) = {count_add_only(n)} = Catalan({n - 1}) = {catalan}")
print()

# Root-gate splits for the richest family.
n = 8
print(f"ame trees of value {n} by root gate:")
for root in ("+", "*", "^"):
    print(f"   {root}: {count_ame(n, root)}")
print(f" all: {count_ame(n)}")
print()

# The enumeration agrees tree for tree, not just in total.
trees = list(enumerate_ame(4))
print(f"all {len(trees)} strict trees of value 4:")
for t in trees:
    print("  ", to_prefix(t))

# Counts stay exact far beyond float range.
c = count_ame(120)
print()
print(f"count_ame(120) has {len(str(c))} digits: {str(c)[:12]}...{str(c)[-6:]}")
