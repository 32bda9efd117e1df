import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bohr_forge.bohr import lift, unlift
from bohr_forge.coeffs import MINUS_ONE, ONE, Coefficient
from bohr_forge.errors import FrequencyOverflowError
from bohr_forge.numtheory import is_squarefree
from bohr_forge.polys import DirichletPolynomial, MultiPolynomial

D = DirichletPolynomial


def test_lift_examples():
    f = D([(1, ONE), (2, ONE), (6, ONE)])
    P = lift(f)
    assert P.var_count == 2
    assert P.coefficient((0, 0)) == ONE
    assert P.coefficient((1, 0)) == ONE
    assert P.coefficient((1, 1)) == ONE

    # 10, 15, 14, -21: blocks of two primes
    g = D([(10, ONE), (15, ONE), (14, ONE), (21, MINUS_ONE)])
    Q = lift(g)
    assert Q.var_count == 4
    assert Q.coefficient((1, 0, 1, 0)) == ONE  # 2*5
    assert Q.coefficient((0, 1, 1, 0)) == ONE  # 3*5
    assert Q.coefficient((1, 0, 0, 1)) == ONE  # 2*7
    assert Q.coefficient((0, 1, 0, 1)) == MINUS_ONE  # 3*7

    const = lift(D.monomial(1))
    assert const.var_count == 0
    assert const.coefficient(()) == ONE


def test_unlift_examples():
    assert unlift(MultiPolynomial(1, [((1,), ONE)])) == D.monomial(2)
    P = MultiPolynomial(
        4,
        [((1, 0, 1, 0), ONE), ((0, 1, 1, 0), ONE), ((1, 0, 0, 1), ONE), ((0, 1, 0, 1), MINUS_ONE)],
    )
    assert unlift(P) == D([(10, ONE), (15, ONE), (14, ONE), (21, MINUS_ONE)])
    assert unlift(MultiPolynomial(0, [((), ONE)])) == D.monomial(1)


def test_unlift_overflow():
    P = MultiPolynomial(1, [((70,), ONE)])  # 2^70 overflows
    with pytest.raises(FrequencyOverflowError):
        unlift(P)


@st.composite
def small_dirichlet(draw):
    freqs = draw(st.lists(st.integers(1, 10_000), min_size=1, max_size=12, unique=True))
    return D(
        (n, Coefficient.root_of_unity(draw(st.integers(0, 23)), 24)) for n in freqs
    )


@given(small_dirichlet())
@settings(max_examples=80, deadline=None)
def test_round_trip_exact(f):
    assert unlift(lift(f)) == f


@given(small_dirichlet())
@settings(max_examples=40, deadline=None)
def test_lift_preserves_norms(f):
    P = lift(f)
    assert P.wiener_norm() == f.wiener_norm()
    assert P.l2_norm() == pytest.approx(f.l2_norm(), abs=1e-12)
    assert len(P) == len(f)


@given(small_dirichlet())
@settings(max_examples=40, deadline=None)
def test_squarefree_iff_zero_one_exponents(f):
    P = lift(f)
    for alpha, _ in P.items():
        n = unlift(MultiPolynomial(P.var_count, [(alpha, ONE)])).spectrum[0]
        assert is_squarefree(n) == all(e <= 1 for e in alpha)


def test_var_count_from_largest_prime_divisor():
    # spectrum max 16 = 2^4 needs one variable only, not pi(16) of them
    f = D([(16, ONE), (2, ONE)])
    assert lift(f).var_count == 1
    g = D([(9, ONE)])
    assert lift(g).var_count == 2
