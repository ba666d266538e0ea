"""Shortest strict {+, *, ^} encoding of each integer, by dynamic programming.

best(n) considers, in order: every additive split n = i + (n-i), every
divisor split n = d * (n/d) with 2 <= d <= n//2, and every exact-root split
n = b ** i with i >= 2.  A candidate replaces the incumbent only when it is
strictly smaller, so ties resolve toward additive over multiplicative over
exponential structure, and toward the earliest (smallest) split point.
Witnesses put the smaller operand on the left for + and *, the base on the
left for ^.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .counting import exponent_candidates, mid_divisors
from .errors import DomainError
from .trees import size


@dataclass(frozen=True)
class ShortestEntry:
    n: int
    size: int
    witness: object  # formula tree


class ShortestTable:
    """Memo of ShortestEntry rows, filled bottom-up on demand."""

    def __init__(self):
        self._lock = threading.RLock()
        self._rows = {1: ShortestEntry(1, 1, 1)}
        self._hi = 1

    def entry(self, n: int) -> ShortestEntry:
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise DomainError(f"value must be a positive integer, got {n!r}")
        with self._lock:
            self._ensure(n)
            return self._rows[n]

    def _ensure(self, n):
        for m in range(self._hi + 1, n + 1):
            best_size = None
            best_tree = None
            for i in range(1, m):
                cand = self._rows[i].size + self._rows[m - i].size + 1
                if best_size is None or cand < best_size:
                    lo, hi = min(i, m - i), max(i, m - i)
                    best_size = cand
                    best_tree = ("+", self._rows[lo].witness, self._rows[hi].witness)
            for d in mid_divisors(m):
                cand = self._rows[d].size + self._rows[m // d].size + 1
                if cand < best_size:
                    best_size = cand
                    best_tree = ("*", self._rows[d].witness, self._rows[m // d].witness)
            for i, b in exponent_candidates(m):
                cand = self._rows[b].size + self._rows[i].size + 1
                if cand < best_size:
                    best_size = cand
                    best_tree = ("^", self._rows[b].witness, self._rows[i].witness)
            self._rows[m] = ShortestEntry(m, best_size, best_tree)
        if n > self._hi:
            self._hi = n


_DEFAULT = ShortestTable()


def shortest(n: int, table: ShortestTable | None = None) -> ShortestEntry:
    """Minimal strict encoding of n.

    shortest(6) -> ShortestEntry(6, 9, ('*', ('+', 1, 1), ('+', 1, ('+', 1, 1))))
    """
    t = table if table is not None else _DEFAULT
    entry = t.entry(n)
    assert size(entry.witness) == entry.size
    return entry


def shortest_range(upto: int, table: ShortestTable | None = None):
    """Yield ShortestEntry for n = 1..upto (inclusive)."""
    t = table if table is not None else _DEFAULT
    t.entry(upto)
    for n in range(1, upto + 1):
        yield t.entry(n)
