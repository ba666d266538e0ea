"""Exact counts of formula trees by value.

Four families, all counted by Catalan-style convolution recurrences on the
root gate:

* add-only trees (counts are the Catalan numbers shifted by one),
* add-only trees under the LOP restriction (left operand >= right),
* {+, *} trees,
* {+, *, ^} trees (strict: no 1 operand under * or ^).

Base case: the bare leaf counts as the single tree for n = 1 and is charged
to the add-rooted class; mul- and pow-rooted counts at n = 1 are zero.
Counts are exact big ints, memoized per table, filled bottom-up so deep
recursion never occurs.
"""

from __future__ import annotations

import threading
from math import isqrt

from .errors import DomainError

ROOT_ALL = "all"
_ROOT_NAMES = {
    "+": "+", "*": "*", "^": "^", "all": "all",
    "add": "+", "mul": "*", "pow": "^",
}


def normalize_root(root: str) -> str:
    try:
        return _ROOT_NAMES[root]
    except KeyError:
        raise DomainError(f"unknown root filter {root!r}") from None


def exact_root(n: int, k: int):
    """Integer b with b**k == n, or None.  Newton floor root, exact check."""
    if n < 1 or k < 1:
        return None
    if n == 1:
        return 1
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x ** k == n else None


def mid_divisors(n: int) -> list[int]:
    """Divisors d of n with 2 <= d <= n//2, ascending."""
    out = set()
    for a in range(2, isqrt(n) + 1):
        if n % a == 0:
            out.add(a)
            b = n // a
            if b <= n // 2:
                out.add(b)
    return sorted(out)


def exponent_candidates(n: int):
    """Exponents i >= 2 with an exact integer i-th root of n, with the root.

    Yields (i, b) pairs, i ascending, b**i == n.  Empty for n < 4.
    """
    for i in range(2, n.bit_length()):
        b = exact_root(n, i)
        if b is not None:
            yield i, b


class CountTable:
    """Memo store for all four count families.

    Reads of filled entries are plain dict lookups; fills are serialized by
    a lock, so concurrent readers are safe and results are deterministic.
    """

    def __init__(self):
        self._lock = threading.RLock()
        self._a = {1: 1}
        self._lop = {1: 1}
        self._am = {"+": {1: 1}, "*": {1: 0}}
        self._ame = {"+": {1: 1}, "*": {1: 0}, "^": {1: 0}}
        self._hi = {"a": 1, "lop": 1, "am": 1, "ame": 1}

    # -- fills ----------------------------------------------------------

    def _ensure_a(self, n):
        if self._hi["a"] >= n:
            return
        with self._lock:
            t = self._a
            for m in range(self._hi["a"] + 1, n + 1):
                t[m] = sum(t[i] * t[m - i] for i in range(1, m))
            self._hi["a"] = max(self._hi["a"], n)

    def _ensure_lop(self, n):
        if self._hi["lop"] >= n:
            return
        with self._lock:
            t = self._lop
            for m in range(self._hi["lop"] + 1, n + 1):
                t[m] = sum(t[i] * t[m - i] for i in range(1, m // 2 + 1))
            self._hi["lop"] = max(self._hi["lop"], n)

    def _ensure_am(self, n):
        if self._hi["am"] >= n:
            return
        with self._lock:
            add, mul = self._am["+"], self._am["*"]
            tot = lambda x: add[x] + mul[x]
            for m in range(self._hi["am"] + 1, n + 1):
                add[m] = sum(tot(i) * tot(m - i) for i in range(1, m))
                mul[m] = sum(tot(d) * tot(m // d) for d in mid_divisors(m))
            self._hi["am"] = max(self._hi["am"], n)

    def _ensure_ame(self, n):
        if self._hi["ame"] >= n:
            return
        with self._lock:
            add, mul, pw = (self._ame[g] for g in "+*^")
            tot = lambda x: add[x] + mul[x] + pw[x]
            for m in range(self._hi["ame"] + 1, n + 1):
                add[m] = sum(tot(i) * tot(m - i) for i in range(1, m))
                mul[m] = sum(tot(d) * tot(m // d) for d in mid_divisors(m))
                pw[m] = sum(tot(b) * tot(i) for i, b in exponent_candidates(m))
            self._hi["ame"] = max(self._hi["ame"], n)

    # -- queries --------------------------------------------------------

    def add_only(self, n):
        self._ensure_a(n)
        return self._a[n]

    def add_lop(self, n):
        self._ensure_lop(n)
        return self._lop[n]

    def am(self, n, root=ROOT_ALL):
        self._ensure_am(n)
        root = normalize_root(root)
        if root == ROOT_ALL:
            return self._am["+"][n] + self._am["*"][n]
        if root == "^":
            raise DomainError("pow root is not in the {+, *} family")
        return self._am[root][n]

    def ame(self, n, root=ROOT_ALL):
        self._ensure_ame(n)
        root = normalize_root(root)
        if root == ROOT_ALL:
            return sum(self._ame[g][n] for g in "+*^")
        return self._ame[root][n]

    # -- persistence hooks (see cache module) ----------------------------

    def entries(self):
        """Snapshot as (family, root, n, count) rows, deterministic order."""
        rows = []
        rows += [("a", "all", n, c) for n, c in sorted(self._a.items())]
        rows += [("lop", "all", n, c) for n, c in sorted(self._lop.items())]
        for root in "+*":
            rows += [("am", root, n, c) for n, c in sorted(self._am[root].items())]
        for root in "+*^":
            rows += [("ame", root, n, c) for n, c in sorted(self._ame[root].items())]
        return rows

    def absorb(self, rows):
        """Install (family, root, n, count) rows; used by cache loading.

        Only gap-free prefixes advance the fill watermark, so a sparse file
        cannot make later fills read missing entries.
        """
        with self._lock:
            for family, root, n, c in rows:
                if family == "a":
                    self._a.setdefault(n, c)
                elif family == "lop":
                    self._lop.setdefault(n, c)
                elif family == "am":
                    self._am[root].setdefault(n, c)
                elif family == "ame":
                    self._ame[root].setdefault(n, c)
                else:
                    raise DomainError(f"unknown count family {family!r}")
            for fam, tabs in (
                ("a", [self._a]),
                ("lop", [self._lop]),
                ("am", [self._am["+"], self._am["*"]]),
                ("ame", [self._ame["+"], self._ame["*"], self._ame["^"]]),
            ):
                hi = self._hi[fam]
                while all(hi + 1 in t for t in tabs):
                    hi += 1
                self._hi[fam] = hi


_DEFAULT = CountTable()


def default_table() -> CountTable:
    """The process-wide memo table used when no table is passed."""
    return _DEFAULT


def _check_n(n):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"value must be a positive integer, got {n!r}")


def count_add_only(n: int, table: CountTable | None = None) -> int:
    """Add-only trees for n; equals the (n-1)st Catalan number.

    count_add_only(3) == 2, count_add_only(5) == 14.
    """
    _check_n(n)
    return (table or _DEFAULT).add_only(n)


def count_add_lop(n: int, table: CountTable | None = None) -> int:
    """Add-only trees with left operand >= right at every addition node."""
    _check_n(n)
    return (table or _DEFAULT).add_lop(n)


def count_am(n: int, root: str = ROOT_ALL, table: CountTable | None = None) -> int:
    """{+, *} trees for n, optionally restricted to a root gate.

    count_am(4, '+') == 5, count_am(4, '*') == 1, count_am(6) == 52.
    """
    _check_n(n)
    return (table or _DEFAULT).am(n, root)


def count_ame(n: int, root: str = ROOT_ALL, table: CountTable | None = None) -> int:
    """Strict {+, *, ^} trees for n, optionally restricted to a root gate.

    count_ame(4, '^') == 1, count_ame(4) == 7, count_ame(6) == 58.
    """
    _check_n(n)
    return (table or _DEFAULT).ame(n, root)
