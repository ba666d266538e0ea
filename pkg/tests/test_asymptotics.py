"""Series arithmetic and the growth-base / leading-constant estimates."""

import mpmath
import pytest

from formula_forge import (
    DomainError,
    NonConvergence,
    TruncatedSeries,
    constant_estimate,
    count_am,
    rho_estimate,
)
from formula_forge.asymptotics import _polish


# series plumbing

def test_series_construction():
    s = TruncatedSeries.from_coefficients([1, 2, 3], 5)
    assert s.coefficients == (1, 2, 3, 0, 0)
    assert s.order == 5
    assert TruncatedSeries.from_coefficients([1, 2, 3], 2).coefficients == (1, 2)
    assert TruncatedSeries.zero(3).coefficients == (0, 0, 0)
    with pytest.raises(DomainError):
        TruncatedSeries.from_coefficients([], 0)


def test_series_extend_truncate():
    s = TruncatedSeries.from_coefficients([1, 2], 2)
    assert s.extend(4).coefficients == (1, 2, 0, 0)
    assert s.extend(2) == s
    assert s.truncate(1).coefficients == (1,)
    with pytest.raises(DomainError):
        s.extend(1)
    with pytest.raises(DomainError):
        s.truncate(3)


def test_series_ring_ops_truncate_to_shorter():
    a = TruncatedSeries.from_coefficients([1, 1, 1, 1], 4)
    b = TruncatedSeries.from_coefficients([1, 2], 2)
    assert (a + b).coefficients == (2, 3)
    assert (a - b).coefficients == (0, -1)
    # (1 + x)^2 through degree 2
    c = TruncatedSeries.from_coefficients([1, 1], 3)
    assert (c * c).coefficients == (1, 2, 1)
    # degree-2 information is honest: only terms below the order survive
    d = TruncatedSeries.from_coefficients([1, 1, 1], 3)
    assert (d * d).coefficients == (1, 2, 3)
    assert (3 * b).coefficients == (3, 6)
    assert (b * 3).coefficients == (3, 6)


def test_series_substitution_and_scaling():
    s = TruncatedSeries.from_coefficients([1, 2, 3], 3)
    t = s.substitute_power(2)
    assert t.order == 5
    assert t.coefficients == (1, 0, 2, 0, 3)
    assert s.substitute_power(1) == s
    with pytest.raises(DomainError):
        s.substitute_power(0)
    assert s.scale_argument(2).coefficients == (1, 4, 12)


def test_series_eval():
    s = TruncatedSeries.from_coefficients([1, 2, 3], 3)
    assert s.eval_at(10) == 321
    assert s.eval_at(0) == 1


# fixed-point polish failure modes

def test_polish_detects_stall():
    with pytest.raises(NonConvergence):
        _polish(lambda x: x + 1, mpmath.mpf(0), mpmath.mpf("1e-20"))


def test_polish_gives_up_after_budget():
    with pytest.raises(NonConvergence):
        _polish(lambda x: x * mpmath.mpf("0.99"), mpmath.mpf(1), mpmath.mpf("1e-40"))


# growth base

def test_rho_brackets():
    am = rho_estimate("am")
    assert 4.07 < am.rho < 4.08
    ame = rho_estimate("ame")
    assert 4.12 < ame.rho < 4.14
    assert am.rho < ame.rho


def test_rho_internal_consistency():
    est = rho_estimate("am", terms=60)
    assert est.family == "am"
    assert abs(est.rho * est.fixed_point - 1) < mpmath.mpf(2) ** -80
    assert est.residual < mpmath.mpf(2) ** -(est.precision_bits - 8)


def test_rho_stable_under_truncation_order():
    a = rho_estimate("am", terms=40)
    b = rho_estimate("am", terms=60)
    assert abs(a.rho - b.rho) < 1e-9


def test_rho_matches_count_ratio_extrapolation():
    # count(n+1)/count(n) ~ rho * (n/(n+1))^(3/2); undo the algebraic factor
    est = rho_estimate("am", terms=60)
    n = 200
    ratio = mpmath.mpf(count_am(n + 1)) / count_am(n)
    extrapolated = ratio * (mpmath.mpf(n + 1) / n) ** mpmath.mpf("1.5")
    assert abs(extrapolated - est.rho) < 1e-3


def test_rho_family_aliases():
    base = rho_estimate("am", terms=40)
    assert rho_estimate("{+,*}", terms=40).rho == base.rho
    assert rho_estimate("a*m", terms=40).rho == base.rho
    assert rho_estimate("{+,*,^}", terms=40).family == "ame"


def test_rho_validation():
    with pytest.raises(DomainError):
        rho_estimate("abc")
    with pytest.raises(DomainError):
        rho_estimate("am", terms=7)
    with pytest.raises(DomainError):
        rho_estimate("am", iterations=0)
    with pytest.raises(DomainError):
        rho_estimate("am", precision_bits=52)


# leading constant

def test_constant_brackets():
    ce = constant_estimate()
    assert 0.1456 < ce.constant < 0.1458
    assert 1.066 < ce.radicand < 1.068
    assert 4.07 < ce.rho < 4.08


def test_constant_ratios_settle_near_one():
    ce = constant_estimate()
    assert len(ce.ratios) == ce.terms - 2
    tail = ce.ratios[-10:]
    mean = sum(tail) / len(tail)
    assert 0.98 < mean < 1.03
    # the normalized ratios drift toward 1 as n grows
    assert abs(ce.ratios[-1] - 1) < abs(ce.ratios[5] - 1)
    assert abs(ce.ratios[-1] - 1) < 0.01


def test_constant_agrees_with_rho_estimate():
    ce = constant_estimate(terms=60)
    assert ce.rho == rho_estimate("am", terms=60).rho


def test_constant_validation():
    with pytest.raises(DomainError):
        constant_estimate(terms=4)
    with pytest.raises(DomainError):
        constant_estimate(precision_bits=10)
