import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bohr_forge.errors import DomainError, ResourceBudgetError
from bohr_forge.numtheory import (
    PrimeTable,
    factorize,
    first_primes,
    is_squarefree,
    omega,
    p_plus,
    primes_up_to,
)


def oracle_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def oracle_primes(limit):
    return [n for n in range(2, limit + 1) if oracle_is_prime(n)]


def test_primes_up_to_examples():
    assert primes_up_to(10).primes == (2, 3, 5, 7)
    assert primes_up_to(10).pi(10) == 4
    assert primes_up_to(2).primes == (2,)
    # trial-division oracle
    assert len(primes_up_to(100)) == len(oracle_primes(100)) == 25


def test_primes_up_to_matches_oracle():
    table = primes_up_to(1000)
    assert list(table.primes) == oracle_primes(1000)


def test_prime_indexing_is_one_based():
    table = primes_up_to(100)
    assert table.prime(1) == 2
    assert table.prime(2) == 3
    assert table.index(7) == 4
    with pytest.raises(DomainError):
        table.prime(0)
    with pytest.raises(DomainError):
        table.index(8)


def test_pi_nondecreasing_and_jumps_exactly_at_primes():
    table = primes_up_to(1000)
    prev = 0
    for n in range(2, 1001):
        cur = table.pi(n)
        assert cur >= prev
        assert (cur - prev == 1) == oracle_is_prime(n)
        prev = cur


def test_primes_domain_and_budget():
    with pytest.raises(DomainError):
        primes_up_to(1)
    with pytest.raises(ResourceBudgetError):
        primes_up_to(10**8 + 1)


def test_first_primes():
    assert first_primes(0) == ()
    assert first_primes(6) == (2, 3, 5, 7, 11, 13)
    assert first_primes(25)[-1] == 97


def test_factorize_examples():
    f = factorize(12)
    assert f.factors == ((2, 2), (3, 1))
    assert f.omega == 3
    assert f.p_plus == 3
    f = factorize(21)
    assert f.factors == ((3, 1), (7, 1))
    assert f.omega == 2
    assert f.p_plus == 7
    assert f.is_squarefree
    assert factorize(1).factors == ()
    assert factorize(1).omega == 0


def test_factorize_domain_errors():
    with pytest.raises(DomainError):
        factorize(0)
    with pytest.raises(DomainError):
        p_plus(1)
    with pytest.raises(DomainError):
        factorize(1).p_plus


def test_derived_functions():
    assert is_squarefree(10)
    assert not is_squarefree(12)
    assert is_squarefree(1)
    assert omega(1024) == 10
    assert omega(1) == 0
    assert p_plus(97) == 97


def test_recomposition_full_range():
    for n in range(2, 100_001):
        f = factorize(n)
        assert f.recompose() == n
        primes = [p for p, _ in f.factors]
        assert primes == sorted(primes)
        assert len(set(primes)) == len(primes)


@given(st.integers(min_value=1, max_value=10**6), st.integers(min_value=1, max_value=10**6))
@settings(max_examples=60)
def test_omega_is_completely_additive(m, n):
    assert omega(m * n) == omega(m) + omega(n)


@given(st.integers(min_value=2, max_value=10**9))
@settings(max_examples=40)
def test_factorize_consistency(n):
    f = factorize(n)
    assert f.recompose() == n
    assert f.omega == sum(e for _, e in f.factors)
    assert f.p_plus == max(p for p, _ in f.factors)
    assert f.is_squarefree == all(e == 1 for _, e in f.factors)
