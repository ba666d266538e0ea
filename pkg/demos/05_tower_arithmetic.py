"""Arithmetic on canonical tower encodings.

Every nonnegative integer has exactly one hereditary base-2 normal form:
a sum of powers x^e with strictly decreasing exponents, each exponent
itself in normal form (x stands for 2).  Addition, multiplication, and
exponentiation can be done directly on these forms, never touching the
integers they denote, and the results land back in normal form.
"""

from formula_forge import (
    GS_ONE,
    encode_goodstein,
    encode_horner,
    g_add,
    g_mul,
    g_pow,
    goodstein_levels,
    gs_to_symexpr,
    gs_value,
    horner_levels,
    render,
)


def show(f):
    return render(gs_to_symexpr(f))


print("= normal forms =")
for n in (1, 2, 5, 6, 7, 100):
    print(f"{n:>4} = {show(encode_goodstein(n))}")
print()

print("= form-level arithmetic =")
a, b = encode_goodstein(13), encode_goodstein(19)
s = g_add(a, b)
p = g_mul(a, b)
print(f"(13) + (19) = {show(s)}  [value {gs_value(s)}]")
print(f"(13) * (19) = {show(p)}  [value {gs_value(p)}]")
assert gs_value(s) == 32 and gs_value(p) == 247
print()

# The classic worked example: 5^3 computed without ever forming 125.
five, three = encode_goodstein(5), encode_goodstein(3)
cube = g_pow(five, three)
print(f"5^3 on forms: {show(cube)}")
assert cube == encode_goodstein(125)
print("structurally equal to encode_goodstein(125):", cube == encode_goodstein(125))
print()

# Addition with a carry chain: 63 + 1 ripples through six digit positions.
carry = g_add(encode_goodstein(63), GS_ONE)
print(f"63 + 1 = {show(carry)}")
print()

print("= level sets =")
# Goodstein levels double-exponentially: 2, 7, 255, then 2^256 - 1.
for t in range(3):
    lvl = goodstein_levels(t)
    print(f"goodstein level {t}: {len(lvl)} expressions")
print()

# Horner levels grow much more slowly and hit each value exactly once.
for t in range(4):
    lvl = horner_levels(t)
    print(f"horner level {t}: {len(lvl)} expressions")
print()

print("= two canonical encodings of the same number =")
for n in (6, 12, 100, 1000):
    g = render(gs_to_symexpr(encode_goodstein(n)))
    h = render(encode_horner(n))
    print(f"{n:>5}  goodstein: {g}")
    print(f"{'':>5}  horner:    {h}")
