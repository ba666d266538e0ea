"""Shared oracles, all deliberately independent of the package internals:
structural generators organized by leaf count or node count (the package
enumerates by value), a classical boolean-array prime sieve, and binomial
Catalan numbers.
"""

import math
from functools import lru_cache

import pytest


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


def classical_primes(limit: int) -> list:
    """Primes <= limit by the classical boolean-array sieve."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [v for v in range(2, limit + 1) if flags[v]]


def _combine(gate, va, vb, cap):
    """Value of (gate va vb) under the strictness rule, or None."""
    if gate == "+":
        v = va + vb
    elif gate == "*":
        if va == 1 or vb == 1:
            return None
        v = va * vb
    else:
        if va == 1 or vb == 1:
            return None
        if vb >= cap.bit_length():  # va >= 2, so va**vb >= 2**vb > cap
            return None
        v = va**vb
    return v if v <= cap else None


@lru_cache(maxsize=None)
def _by_leaves(leaves: int, gates: str, cap: int):
    """Strict trees with exactly `leaves` leaves and value <= cap,
    bucketed by value.  Leaf-structured recursion, so the package's
    value-structured enumeration cannot share a bug with it."""
    if leaves == 1:
        return {1: (1,)}
    out = {}
    for la in range(1, leaves):
        left = _by_leaves(la, gates, cap)
        right = _by_leaves(leaves - la, gates, cap)
        for va, ta in left.items():
            for vb, tb in right.items():
                for gate in gates:
                    v = _combine(gate, va, vb, cap)
                    if v is None:
                        continue
                    bucket = out.setdefault(v, [])
                    bucket.extend((gate, a, b) for a in ta for b in tb)
    return {v: tuple(ts) for v, ts in out.items()}


def brute_trees(n: int, gates: str) -> set:
    """Every strict tree over `gates` with value exactly n.

    Sound because strict monotone trees satisfy value >= leaf count, so
    leaves range over 1..n only.
    """
    found = set()
    for leaves in range(1, n + 1):
        found.update(_by_leaves(leaves, gates, n).get(n, ()))
    return found


def brute_min_sizes(cap: int, max_size: int = 41) -> dict:
    """Minimum strict-tree size for every value 1..cap, by sweeping exact
    sizes in ascending order; the first size at which a value appears is
    its minimum.  Again sound because subtree values never exceed the root
    value in a monotone tree."""
    values_at = {1: {1}}
    first = {1: 1}
    s = 1
    while len(first) < cap and s < max_size:
        s += 2
        here = set()
        for i in range(1, s - 1, 2):
            for va in values_at[i]:
                for vb in values_at[s - 1 - i]:
                    for gate in "+*^":
                        v = _combine(gate, va, vb, cap)
                        if v is not None:
                            here.add(v)
        values_at[s] = here
        for v in here:
            first.setdefault(v, s)
    assert len(first) >= cap, f"size sweep hit {max_size} with values missing"
    return first


@pytest.fixture(scope="session")
def primes_to_4096():
    return classical_primes(4096)
