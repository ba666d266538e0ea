"""Shorthand expressions over the symbol x (the doubled unit, value 2).

Encodings built from towers of x quickly describe numbers far too large to
expand into raw formula trees, so this module keeps them symbolic: immutable
nodes One, X, Sum, Prod, Pow, plus Neg strictly for reciprocal exponents.
Smart constructors flatten nested sums/products, drop unit factors, collapse
trivial powers, and keep n-ary operands sorted by descending value, so two
equal-shaped encodings compare equal structurally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError


@dataclass(frozen=True)
class SymExpr:
    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class _One(SymExpr):
    pass


@dataclass(frozen=True)
class _X(SymExpr):
    pass


ONE = _One()
X = _X()


@dataclass(frozen=True)
class Sum(SymExpr):
    terms: tuple


@dataclass(frozen=True)
class Prod(SymExpr):
    factors: tuple


@dataclass(frozen=True)
class Pow(SymExpr):
    base: SymExpr
    exponent: SymExpr


@dataclass(frozen=True)
class Neg(SymExpr):
    """Negated exponent; only valid underneath Pow."""

    inner: SymExpr


@lru_cache(maxsize=None)
def sym_value(e: SymExpr):
    """Numeric value at x = 2; an int, or a Fraction under Neg exponents."""
    if e is ONE or isinstance(e, _One):
        return 1
    if e is X or isinstance(e, _X):
        return 2
    if isinstance(e, Sum):
        return sum(sym_value(t) for t in e.terms)
    if isinstance(e, Prod):
        v = 1
        for f in e.factors:
            v *= sym_value(f)
        return v
    if isinstance(e, Pow):
        b = sym_value(e.base)
        x = sym_value(e.exponent)
        if isinstance(x, int) and x >= 0:
            return b**x
        if x < 0:
            return Fraction(1, b ** int(-x))
        raise DomainError(f"unsupported exponent value {x!r}")
    if isinstance(e, Neg):
        v = sym_value(e.inner)
        if not (isinstance(v, int) and v >= 1):
            raise DomainError("Neg wraps positive integer exponents only")
        return Fraction(-v)
    raise DomainError(f"not a symbolic expression: {e!r}")


def _sort_key(e):
    return (-sym_value(e), render(e))


def sym_sum(terms) -> SymExpr:
    """n-ary sum with flattening and value-descending canonical order."""
    flat = []
    for t in terms:
        if isinstance(t, Sum):
            flat.extend(t.terms)
        else:
            flat.append(t)
    if not flat:
        raise DomainError("empty sum")
    if len(flat) == 1:
        return flat[0]
    return Sum(tuple(sorted(flat, key=_sort_key)))


def sym_prod(factors) -> SymExpr:
    """n-ary product; drops unit factors, flattens, sorts by value desc."""
    flat = []
    for f in factors:
        if isinstance(f, Prod):
            flat.extend(f.factors)
        elif isinstance(f, _One):
            continue
        else:
            flat.append(f)
    if not flat:
        return ONE
    if len(flat) == 1:
        return flat[0]
    return Prod(tuple(sorted(flat, key=_sort_key)))


def sym_pow(base: SymExpr, exponent: SymExpr) -> SymExpr:
    if isinstance(base, _One):
        return ONE
    if isinstance(exponent, _One):
        return base
    return Pow(base, exponent)


# precedence: Sum < Prod < Pow < atom
_PREC_SUM, _PREC_PROD, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4


def _prec(e):
    if isinstance(e, (Sum, Neg)):
        return _PREC_SUM
    if isinstance(e, Prod):
        return _PREC_PROD
    if isinstance(e, Pow):
        return _PREC_POW
    return _PREC_ATOM


def _wrap(e, minimum):
    s = render(e)
    return f"({s})" if _prec(e) < minimum else s


def render(e: SymExpr) -> str:
    """Infix form with minimal parentheses.

    render(sym_sum([Pow(X, X), X, ONE])) == 'x^x + x + 1'
    render(Pow(X, sym_sum([X, ONE]))) == 'x^(x + 1)'
    render(Pow(X, Neg(ONE))) == 'x^(-1)'
    """
    if isinstance(e, _One):
        return "1"
    if isinstance(e, _X):
        return "x"
    if isinstance(e, Sum):
        return " + ".join(_wrap(t, _PREC_PROD) for t in e.terms)
    if isinstance(e, Prod):
        return "*".join(_wrap(f, _PREC_PROD) for f in e.factors)
    if isinstance(e, Pow):
        return f"{_wrap(e.base, _PREC_ATOM)}^{_wrap(e.exponent, _PREC_ATOM)}"
    if isinstance(e, Neg):
        return f"-{_wrap(e.inner, _PREC_ATOM)}"
    raise DomainError(f"not a symbolic expression: {e!r}")


def expand_x(e: SymExpr):
    """Rewrite into a raw formula tree, substituting x = (1 + 1).

    The result is a strict tree whose evaluate() equals sym_value(e).
    Reciprocal exponents have no tree form and raise DomainError.
    """
    if isinstance(e, _One):
        return 1
    if isinstance(e, _X):
        return ("+", 1, 1)
    if isinstance(e, Sum):
        return _fold("+", [expand_x(t) for t in e.terms])
    if isinstance(e, Prod):
        return _fold("*", [expand_x(f) for f in e.factors])
    if isinstance(e, Pow):
        return ("^", expand_x(e.base), expand_x(e.exponent))
    raise DomainError(f"no tree form for {e!r}")


def _fold(gate, parts):
    out = parts[0]
    for p in parts[1:]:
        out = (gate, out, p)
    return out
