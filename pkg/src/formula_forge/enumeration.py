"""Exhaustive enumeration of formula trees by value, as lazy streams.

Stream order is deterministic: addition splits by ascending left value with
the left subtree stream outermost, multiplicative splits by ascending
divisor, exponent splits by ascending exponent; for a full-universe request
the root classes come in gate order add, mul, pow.

By default nothing is memoized (bounded memory, some recomputation).  With
``cached=True`` subtree lists are materialized in a per-call memo, which is
the right trade for small n (say n <= 12); the memo is dropped when the
stream is exhausted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counting import exponent_candidates, mid_divisors, normalize_root
from .errors import DomainError
from .trees import to_postfix, to_prefix

_GATE_SETS = ("a", "am", "ame")


def _check_n(n):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"value must be a positive integer, got {n!r}")


# -- add-only ------------------------------------------------------------

def _add_gen(n):
    if n == 1:
        yield 1
        return
    for i in range(1, n):
        for left in _add_gen(i):
            for right in _add_gen(n - i):
                yield ("+", left, right)


def _add_list(n, memo):
    out = memo.get(n)
    if out is None:
        if n == 1:
            out = (1,)
        else:
            out = tuple(
                ("+", left, right)
                for i in range(1, n)
                for left in _add_list(i, memo)
                for right in _add_list(n - i, memo)
            )
        memo[n] = out
    return out


def enumerate_add(n: int, cached: bool = False):
    """All add-only trees for n; length count_add_only(n).

    list(enumerate_add(3)) == [('+', 1, ('+', 1, 1)), ('+', ('+', 1, 1), 1)]
    """
    _check_n(n)
    return iter(_add_list(n, {})) if cached else _add_gen(n)


# -- add-only, LOP restricted ---------------------------------------------

def _lop_gen(n):
    if n == 1:
        yield 1
        return
    for i in range(1, n // 2 + 1):
        for left in _lop_gen(n - i):
            for right in _lop_gen(i):
                yield ("+", left, right)


def _lop_list(n, memo):
    out = memo.get(n)
    if out is None:
        if n == 1:
            out = (1,)
        else:
            out = tuple(
                ("+", left, right)
                for i in range(1, n // 2 + 1)
                for left in _lop_list(n - i, memo)
                for right in _lop_list(i, memo)
            )
        memo[n] = out
    return out


def enumerate_add_lop(n: int, cached: bool = False):
    """Add-only trees whose every addition has left value >= right value.

    list(enumerate_add_lop(3)) == [('+', ('+', 1, 1), 1)]
    """
    _check_n(n)
    return iter(_lop_list(n, {})) if cached else _lop_gen(n)


# -- {+, *} ----------------------------------------------------------------

def _am_gen(n, root):
    if root == "+":
        if n == 1:
            yield 1
            return
        for i in range(1, n):
            for left in _am_gen(i, "all"):
                for right in _am_gen(n - i, "all"):
                    yield ("+", left, right)
    elif root == "*":
        for d in mid_divisors(n):
            for left in _am_gen(d, "all"):
                for right in _am_gen(n // d, "all"):
                    yield ("*", left, right)
    else:
        yield from _am_gen(n, "+")
        yield from _am_gen(n, "*")


def _am_list(n, root, memo):
    out = memo.get((n, root))
    if out is None:
        if root == "+":
            if n == 1:
                out = (1,)
            else:
                out = tuple(
                    ("+", left, right)
                    for i in range(1, n)
                    for left in _am_list(i, "all", memo)
                    for right in _am_list(n - i, "all", memo)
                )
        elif root == "*":
            out = tuple(
                ("*", left, right)
                for d in mid_divisors(n)
                for left in _am_list(d, "all", memo)
                for right in _am_list(n // d, "all", memo)
            )
        else:
            out = _am_list(n, "+", memo) + _am_list(n, "*", memo)
        memo[(n, root)] = out
    return out


def enumerate_am(n: int, root: str = "all", cached: bool = False):
    """All {+, *} trees for n, optionally only those with a given root gate.

    list(enumerate_am(4, '*')) == [('*', ('+', 1, 1), ('+', 1, 1))]
    """
    _check_n(n)
    root = normalize_root(root)
    if root == "^":
        raise DomainError("pow root is not in the {+, *} family")
    return iter(_am_list(n, root, {})) if cached else _am_gen(n, root)


# -- {+, *, ^}, strict ------------------------------------------------------

def _ame_gen(n, root):
    if root == "+":
        if n == 1:
            yield 1
            return
        for i in range(1, n):
            for left in _ame_gen(i, "all"):
                for right in _ame_gen(n - i, "all"):
                    yield ("+", left, right)
    elif root == "*":
        for d in mid_divisors(n):
            for left in _ame_gen(d, "all"):
                for right in _ame_gen(n // d, "all"):
                    yield ("*", left, right)
    elif root == "^":
        for i, b in exponent_candidates(n):
            for base in _ame_gen(b, "all"):
                for exp in _ame_gen(i, "all"):
                    yield ("^", base, exp)
    else:
        yield from _ame_gen(n, "+")
        yield from _ame_gen(n, "*")
        yield from _ame_gen(n, "^")


def _ame_list(n, root, memo):
    out = memo.get((n, root))
    if out is None:
        if root == "+":
            if n == 1:
                out = (1,)
            else:
                out = tuple(
                    ("+", left, right)
                    for i in range(1, n)
                    for left in _ame_list(i, "all", memo)
                    for right in _ame_list(n - i, "all", memo)
                )
        elif root == "*":
            out = tuple(
                ("*", left, right)
                for d in mid_divisors(n)
                for left in _ame_list(d, "all", memo)
                for right in _ame_list(n // d, "all", memo)
            )
        elif root == "^":
            out = tuple(
                ("^", base, exp)
                for i, b in exponent_candidates(n)
                for base in _ame_list(b, "all", memo)
                for exp in _ame_list(i, "all", memo)
            )
        else:
            out = (
                _ame_list(n, "+", memo)
                + _ame_list(n, "*", memo)
                + _ame_list(n, "^", memo)
            )
        memo[(n, root)] = out
    return out


def enumerate_ame(n: int, root: str = "all", cached: bool = False):
    """All strict {+, *, ^} trees for n; exponent nodes are (^ base exp).

    list(enumerate_ame(4, '^')) == [('^', ('+', 1, 1), ('+', 1, 1))]
    """
    _check_n(n)
    root = normalize_root(root)
    return iter(_ame_list(n, root, {})) if cached else _ame_gen(n, root)


# -- request form -----------------------------------------------------------

@dataclass(frozen=True)
class EnumerationRequest:
    """What to enumerate: value, gate set, root filter, LOP restriction."""

    n: int
    gates: str = "a"
    root: str = "all"
    lop: bool = False

    def __post_init__(self):
        _check_n(self.n)
        if self.gates not in _GATE_SETS:
            raise DomainError(f"gate set must be one of {_GATE_SETS}, got {self.gates!r}")
        root = normalize_root(self.root)
        object.__setattr__(self, "root", root)
        if root == "*" and self.gates == "a":
            raise DomainError("mul root needs gate set am or ame")
        if root == "^" and self.gates != "ame":
            raise DomainError("pow root needs gate set ame")
        if self.lop and self.gates != "a":
            raise DomainError("the LOP restriction is defined for add-only trees")


def enumerate_trees(request: EnumerationRequest, cached: bool = False):
    """Dispatch a request to the matching stream."""
    if request.lop:
        return enumerate_add_lop(request.n, cached)
    if request.gates == "a":
        return enumerate_add(request.n, cached)
    if request.gates == "am":
        return enumerate_am(request.n, request.root, cached)
    return enumerate_ame(request.n, request.root, cached)


def enumerate_strings(request: EnumerationRequest, notation: str = "prefix",
                      cached: bool = False):
    """The same stream rendered as prefix or postfix strings.

    list(enumerate_strings(EnumerationRequest(3))) == ['+1+11', '++111']
    """
    if notation == "prefix":
        render = to_prefix
    elif notation == "postfix":
        render = to_postfix
    else:
        raise DomainError(f"notation must be prefix or postfix, got {notation!r}")
    return map(render, enumerate_trees(request, cached))
