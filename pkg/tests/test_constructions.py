import math

import numpy as np
import pytest

from bohr_forge.bohr import lift
from bohr_forge.coeffs import MINUS_ONE, ONE
from bohr_forge.constructions import (
    dirichlet_rudin_shapiro,
    flat_polynomial,
    flat_pullback,
    flat_tuple,
    rudin_shapiro,
    rudin_shapiro_sup_bound,
)
from bohr_forge.errors import (
    ConfigError,
    FrequencyOverflowError,
    ResourceBudgetError,
)
from bohr_forge.numtheory import factorize, first_primes
from bohr_forge.polys import DirichletPolynomial, MultiPolynomial


def coeffs_1d(P):
    out = {}
    for alpha, c in P.items():
        out[alpha[0]] = c.to_complex()
    return out


def test_rudin_shapiro_base_and_small():
    P0, Q0 = rudin_shapiro(0)
    assert coeffs_1d(P0) == {0: 1}
    assert coeffs_1d(Q0) == {0: 1}
    P1, Q1 = rudin_shapiro(1)
    assert coeffs_1d(P1) == {0: 1, 1: 1}
    assert coeffs_1d(Q1) == {0: 1, 1: -1}
    P2, Q2 = rudin_shapiro(2)
    assert coeffs_1d(P2) == {0: 1, 1: 1, 2: 1, 3: -1}
    assert coeffs_1d(Q2) == {0: 1, 1: 1, 2: -1, 3: 1}


def test_rudin_shapiro_shape():
    for n in range(0, 9):
        P, Q = rudin_shapiro(n)
        for poly in (P, Q):
            assert len(poly) == 2**n
            assert poly.degree() == 2**n - 1
            assert all(c == ONE or c == MINUS_ONE for _, c in poly.items())
            assert poly.wiener_norm() == 2**n


def test_rudin_shapiro_cap():
    with pytest.raises(ResourceBudgetError):
        rudin_shapiro(25)


def test_rudin_shapiro_modulus_identity():
    rng = np.random.default_rng(5)
    for n in range(0, 9):
        P, Q = rudin_shapiro(n)
        thetas = rng.uniform(0, 2 * math.pi, size=(200, 1))
        total = np.abs(P.evaluate_torus(thetas)) ** 2 + np.abs(Q.evaluate_torus(thetas)) ** 2
        assert np.max(np.abs(total - 2 ** (n + 1))) < 1e-9


def test_dirichlet_rudin_shapiro_examples():
    P1, Q1 = dirichlet_rudin_shapiro(1)
    assert P1 == DirichletPolynomial([(1, ONE), (2, ONE)])
    assert Q1 == DirichletPolynomial([(1, ONE), (2, MINUS_ONE)])
    P2, _ = dirichlet_rudin_shapiro(2)
    assert P2 == DirichletPolynomial([(1, ONE), (2, ONE), (3, ONE), (6, MINUS_ONE)])
    P0, Q0 = dirichlet_rudin_shapiro(0)
    assert P0 == Q0 == DirichletPolynomial.monomial(1)


def test_dirichlet_rudin_shapiro_spectrum():
    for n in (3, 5, 8):
        P, Q = dirichlet_rudin_shapiro(n)
        primorial = math.prod(first_primes(n))
        for poly in (P, Q):
            assert poly.wiener_norm() == 2**n
            assert len(poly) == 2**n
            for freq, c in poly.items():
                assert primorial % freq == 0
                assert factorize(freq).is_squarefree
                assert c == ONE or c == MINUS_ONE


def test_dirichlet_rudin_shapiro_cap():
    with pytest.raises(FrequencyOverflowError):
        dirichlet_rudin_shapiro(16)


def test_flat_polynomial_worked_examples():
    # one round: row 1 of the sign matrix
    out = flat_polynomial(2, 1, "hadamard", 1)
    assert out.poly == MultiPolynomial(2, [((1, 0), ONE), ((0, 1), ONE)])
    # two rounds, by hand: z3 (z1 + z2) + z4 (z1 - z2)
    out = flat_polynomial(2, 2, "hadamard", 1)
    expected = MultiPolynomial(
        4,
        [
            ((1, 0, 1, 0), ONE),
            ((0, 1, 1, 0), ONE),
            ((1, 0, 0, 1), ONE),
            ((0, 1, 0, 1), MINUS_ONE),
        ],
    )
    assert out.poly == expected
    assert out.declared_sup_upper == pytest.approx(2 * math.sqrt(2))
    # schur row 1 (0-based): z1 + w z2 + w^2 z3
    out = flat_polynomial(3, 1, "schur", 2)
    w = np.exp(2j * np.pi / 3)
    got = {alpha.index(1): c.to_complex() for alpha, c in out.poly.items()}
    assert abs(got[0] - 1) < 1e-14
    assert abs(got[1] - w) < 1e-14
    assert abs(got[2] - w * w) < 1e-14


def test_flat_polynomial_validation():
    with pytest.raises(ConfigError):
        flat_polynomial(3, 2, "hadamard", 1)
    with pytest.raises(ConfigError):
        flat_polynomial(2, 2, "hadamard", 3)
    with pytest.raises(ConfigError):
        flat_polynomial(2, 2, "fourier", 1)


def test_flat_properties_exact():
    for q, d, kind in [(2, 3, "hadamard"), (4, 2, "hadamard"), (3, 2, "schur"), (5, 1, "schur")]:
        comps = flat_tuple(q, d, kind)
        assert len(comps) == q
        for poly in comps:
            assert poly.var_count == q * d
            assert poly.degree() == d
            assert poly.is_homogeneous()
            assert len(poly) == q**d
            assert poly.wiener_norm() == q**d
            assert all(c.is_root for _, c in poly.items())


def test_hadamard_outputs_are_sign_polynomials():
    out = flat_pullback(flat_polynomial(4, 2, "hadamard", 3))
    for _, c in out.poly.items():
        assert c == ONE or c == MINUS_ONE
    for _, c in out.pullback.items():
        assert c == ONE or c == MINUS_ONE


def test_pullback_worked_examples():
    out = flat_pullback(flat_polynomial(2, 2, "hadamard", 1))
    assert out.pullback == DirichletPolynomial(
        [(10, ONE), (15, ONE), (14, ONE), (21, MINUS_ONE)]
    )
    assert out.spectrum_max == 21
    assert out.spectrum_max <= 7**2  # p_{qd}^d

    out = flat_pullback(flat_polynomial(2, 1, "hadamard", 1))
    assert out.pullback == DirichletPolynomial([(2, ONE), (3, ONE)])

    out = flat_pullback(flat_polynomial(2, 3, "hadamard", 1))
    assert len(out.pullback) == 8
    assert out.spectrum_max == 3 * 7 * 13
    for freq, _ in out.pullback.items():
        assert factorize(freq).is_squarefree
        assert factorize(freq).omega == 3


def test_pullback_block_structure():
    q, d = 3, 2
    out = flat_pullback(flat_polynomial(q, d, "schur", 1))
    primes = first_primes(q * d)
    index = {p: j + 1 for j, p in enumerate(primes)}
    for freq, _ in out.pullback.items():
        fac = factorize(freq)
        assert fac.is_squarefree and fac.omega == d
        idxs = sorted(index[p] for p, _ in fac.factors)
        for block, i in enumerate(idxs, start=1):
            assert (block - 1) * q + 1 <= i <= block * q


def test_pullback_lift_round_trip():
    for q, d, kind in [(2, 2, "hadamard"), (3, 2, "schur"), (2, 3, "hadamard")]:
        out = flat_pullback(flat_polynomial(q, d, kind, 1))
        assert lift(out.pullback) == out.poly


def test_tuple_modulus_identity_small():
    rng = np.random.default_rng(17)
    for q, d, kind in [(2, 2, "hadamard"), (3, 1, "schur"), (3, 2, "schur"), (4, 2, "hadamard")]:
        comps = flat_tuple(q, d, kind)
        thetas = rng.uniform(0, 2 * math.pi, size=(100, q * d))
        total = np.zeros(100)
        for poly in comps:
            total += np.abs(poly.evaluate_torus(thetas)) ** 2
        assert np.max(np.abs(total - float(q) ** (d + 1))) < 1e-9


def test_sup_bound_value():
    assert rudin_shapiro_sup_bound(3) == pytest.approx(2**2)
    assert rudin_shapiro_sup_bound(0) == pytest.approx(math.sqrt(2))


def test_term_budget():
    with pytest.raises(ResourceBudgetError):
        flat_tuple(10, 8, "schur")
