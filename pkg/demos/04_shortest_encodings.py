"""Smallest formulas: how few nodes does it take to write n?

A dynamic program fills, for every value, the minimal node count over all
strict {+,*,^} trees and one witness tree per value.  Powers of two get
dramatically short encodings; primes pay full price for their final +1.
"""

from formula_forge import shortest, shortest_range, evaluate, to_prefix

print(" n  size  witness")
for entry in shortest_range(32):
    print(f"{entry.n:>3}  {entry.size:>3}   {to_prefix(entry.witness)}")
print()

# The additive-only cost of n is 2n - 1 nodes; gates buy logarithmic shortcuts.
for n in (64, 256, 1024):
    e = shortest(n)
    assert evaluate(e.witness) == n
    print(f"shortest({n}): {e.size} nodes vs {2 * n - 1} additive, {to_prefix(e.witness)}")
print()

sizes = [shortest(n).size for n in range(1, 1025)]
worst = max(range(1, 1025), key=lambda n: sizes[n - 1])
print(f"hardest value up to 1024: n = {worst} needs {sizes[worst - 1]} nodes")
print(f"mean size over 1..1024: {sum(sizes) / len(sizes):.2f}")
