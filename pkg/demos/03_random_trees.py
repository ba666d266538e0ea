"""Uniform random formulas by recursive weighted choice.

Every tree of value n gets probability exactly 1/count(n): at each node a
loaded die, weighted by exact subcounts, picks the root gate and the split,
then recurses.  No rejection, no bias, reproducible under a seed.
"""

import random
from collections import Counter

from formula_forge import (
    count_am,
    sample_add,
    sample_am,
    sample_ame,
    evaluate,
    size,
    to_prefix,
)

rng = random.Random(7)

print("five uniform addition-only trees of value 6:")
for _ in range(5):
    print("  ", to_prefix(sample_add(6, rng)))
print()

print("five uniform strict {+,*,^} trees of value 36:")
for _ in range(5):
    t = sample_ame(36, rng)
    assert evaluate(t) == 36
    print(f"   size {size(t):>3}  {to_prefix(t)}")
print()

# Empirical check against the exact count: value 5 has 16 strict {+,*}
# trees, so 16000 draws should land near 1000 each.
n, draws = 5, 16000
hist = Counter(sample_am(n, rng) for _ in range(draws))
expected = draws // count_am(n)
print(f"{draws} draws over the {count_am(n)} trees of value {n} (expect ~{expected}):")
for t, c in sorted(hist.items(), key=lambda kv: to_prefix(kv[0])):
    print(f"   {to_prefix(t):<12} {c:>5}")
print()

# Forced root gates reuse the same machinery.
print("three multiplication-rooted trees of value 24:")
for _ in range(3):
    print("  ", to_prefix(sample_am(24, rng, root="*")))
