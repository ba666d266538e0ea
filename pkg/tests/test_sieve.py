"""Prime discovery by encoding completion, against a classical sieve."""

from fractions import Fraction

import pytest

from formula_forge import (
    DomainError,
    InternalGapError,
    LevelTooLarge,
    ONE,
    SieveState,
    X,
    initial_state,
    multi_factor_products,
    prime_power_range,
    rational_set,
    run_sieve,
    scf_coarse,
    sym_value,
    zeta_step,
)

from conftest import classical_primes


def test_initial_state():
    s = initial_state()
    assert s.level == 0
    assert s.covers == 2
    assert s.integers == (ONE, X)
    assert s.primes == (X,)
    assert s.prime_values() == [2]


def test_run_sieve_zero_is_initial():
    assert run_sieve(0) == initial_state()


def test_small_run_matches_classical_primes():
    s = run_sieve(3)
    assert s.covers == 32
    assert s.prime_values() == classical_primes(32)
    assert len(s.primes) == 11


def test_no_value_is_skipped_and_encodings_are_exact():
    s = run_sieve(6)
    assert s.covers == 256
    for i, enc in enumerate(s.integers):
        assert sym_value(enc) == i + 1
    assert s.prime_values() == classical_primes(256)
    # a prime's flagged encoding is the table entry for that value
    for p, v in zip(s.primes, s.prime_values()):
        assert s.integers[v - 1] == p


def test_encoding_of():
    s = run_sieve(2)
    assert s.encoding_of(1) is ONE
    assert sym_value(s.encoding_of(11)) == 11
    for bad in (0, 17, -3, True, 2.5):
        with pytest.raises(DomainError):
            s.encoding_of(bad)


def test_prime_power_range_golden():
    s = run_sieve(1)  # covers 8, primes 2 3 5 7
    got = prime_power_range(s, 2)
    assert sorted(v for v, _ in got) == [9, 16]
    for v, enc in got:
        assert sym_value(enc) == v
    # squares only show up once their range is reached
    assert [v for v, _ in prime_power_range(s, 1)] == [8]
    with pytest.raises(DomainError):
        prime_power_range(initial_state(), 2)


def test_multi_factor_products_golden():
    s = run_sieve(1)
    got = multi_factor_products(s, 2, 2)
    assert sorted(v for v, _ in got) == [10, 12, 14, 15]
    for v, enc in got:
        assert sym_value(enc) == v
    # no product of three distinct primes fits below 16
    assert multi_factor_products(s, 2, 3) == []
    for bad in (1, 0, -2, True, "2"):
        with pytest.raises(DomainError):
            multi_factor_products(s, 2, bad)
    with pytest.raises(DomainError):
        multi_factor_products(initial_state(), 2, 2)


def test_zeta_step_advances_one_range():
    s = run_sieve(2)
    t = zeta_step(s)
    assert t.level == s.level + 1
    assert t.covers == 2 * s.covers
    assert t.integers[: s.covers] == s.integers
    assert t.prime_values() == classical_primes(t.covers)


def test_corrupt_state_is_detected():
    # a duplicated prime makes the same power arrive twice
    broken = SieveState(0, (ONE, X), (X, X))
    with pytest.raises(InternalGapError):
        zeta_step(broken)


def test_run_sieve_guards():
    with pytest.raises(LevelTooLarge):
        run_sieve(15)
    for bad in (-1, 1.5, True, "3"):
        with pytest.raises(DomainError):
            run_sieve(bad)


def test_coarse_matches_dyadic_at_equal_coverage():
    assert scf_coarse(0) == initial_state()
    assert scf_coarse(1) == zeta_step(initial_state())
    assert scf_coarse(1).covers == 4
    two = scf_coarse(2)
    assert two.covers == 16
    assert two == run_sieve(2)
    with pytest.raises(LevelTooLarge):
        scf_coarse(3)
    with pytest.raises(DomainError):
        scf_coarse(-1)


def test_rational_set_golden():
    got = rational_set(initial_state(), 1, 1)
    assert [str(e) for e in got] == ["1", "x", "x^(-1)"]
    assert [sym_value(e) for e in got] == [1, 2, Fraction(1, 2)]


def test_rational_set_counts_and_values():
    s = run_sieve(1)  # 4 primes known
    got = rational_set(s, 2, 2)
    # sum over c of C(4, c) * 4^c picks: 1 + 16 + 96
    assert len(got) == 113
    values = [sym_value(e) for e in got]
    assert len(set(values)) == len(values)
    assert all(isinstance(v, (int, Fraction)) and v > 0 for v in values)


def test_rational_set_validation():
    s = initial_state()
    with pytest.raises(DomainError):
        rational_set(s, 0, 1)
    with pytest.raises(DomainError):
        rational_set(s, 1, -1)
    with pytest.raises(DomainError):
        rational_set(s, 3, 1)  # exponent 3 has no encoding yet
    with pytest.raises(DomainError):
        rational_set(s, True, 1)
