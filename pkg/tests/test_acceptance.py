"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines; a plain ``pytest`` run reports the same outcomes through test names.
"""

import functools
import math
import time

import numpy as np
import pytest

import bohr_forge.experiments as exp
from bohr_forge.bohr import lift
from bohr_forge.coeffs import MINUS_ONE, ONE, Coefficient
from bohr_forge.constructions import (
    flat_polynomial,
    flat_pullback,
    flat_tuple,
    rudin_shapiro,
    rudin_shapiro_sup_bound,
)
from bohr_forge.norms import (
    curvature_bound,
    sup_lower_grid,
    sup_upper_lipschitz,
    tuple_identity_check,
)
from bohr_forge.numtheory import factorize, first_primes
from bohr_forge.polys import DirichletPolynomial, MultiPolynomial
from bohr_forge.serialize import canonical_json

TWO_SQRT2 = 2 * math.sqrt(2)

STANDARD_CONFIGS = [(q, d, "hadamard") for q in (2, 4, 8) for d in (1, 2, 3)] + [
    (q, d, "schur") for q in (2, 3, 5) for d in (1, 2, 3)
]


def criterion(num, name):
    def deco(fn):
        @functools.wraps(fn)
        def wrapped(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"[criterion {num:02d}] {name}: FAIL")
                raise
            print(f"[criterion {num:02d}] {name}: PASS")

        return wrapped

    return deco


@criterion(1, "lemma-3.1 exact suite")
def test_criterion_01_flat_generator_exact_suite():
    t0 = time.time()
    for q, d, kind in STANDARD_CONFIGS:
        out = flat_pullback(flat_polynomial(q, d, kind, 1))
        poly = out.poly
        assert poly.is_homogeneous() and poly.degree() == d
        assert poly.var_count == q * d
        wiener = poly.wiener_norm()
        assert isinstance(wiener, int) and wiener == q**d
        for freq, _ in out.pullback.items():
            fac = factorize(freq)
            assert fac.is_squarefree and fac.omega == d
        assert lift(out.pullback) == poly
        assert out.spectrum_max <= first_primes(q * d)[-1] ** d
    assert time.time() - t0 < 60


@criterion(2, "tuple norm identity q^{d+1}")
def test_criterion_02_tuple_identity():
    for q, d, kind in STANDARD_CONFIGS:
        comps = flat_tuple(q, d, kind)
        residual = tuple_identity_check(comps, trials=1000, seed=20_000 + q * 10 + d)
        assert residual < 1e-9, (q, d, kind, residual)


@criterion(3, "rudin-shapiro identity, norms, sup cap")
def test_criterion_03_rudin_shapiro():
    rng = np.random.default_rng(3)
    for n in range(0, 13):
        P, Q = rudin_shapiro(n)
        thetas = rng.uniform(0, 2 * math.pi, size=(1000, 1))
        total = np.abs(P.evaluate_torus(thetas)) ** 2 + np.abs(Q.evaluate_torus(thetas)) ** 2
        assert float(np.max(np.abs(total - 2 ** (n + 1)))) < 1e-9
        wiener = P.wiener_norm()
        assert isinstance(wiener, int) and wiener == 2**n
        points = min(1 << 14, max(64, 4 * 2**n))
        cert = sup_lower_grid(P, points_per_dim=points, refine_steps=1)
        assert cert.lower <= rudin_shapiro_sup_bound(n) + 1e-9


@criterion(4, "worked Sidon certificate (2,2)")
def test_criterion_04_worked_sidon_certificate():
    t0 = time.time()
    cert = exp.sidon_certificate(2, 2, "hadamard")
    assert cert.n_min == 21
    assert abs(cert.bound - math.sqrt(2)) < 1e-9
    upper = sup_upper_lipschitz(flat_polynomial(2, 2, "hadamard", 1).poly, points_per_dim=256).upper
    assert TWO_SQRT2 - 1e-12 <= upper <= 1.02 * TWO_SQRT2
    assert time.time() - t0 < 30


@criterion(5, "certificate sandwich on known sups")
def test_criterion_05_certificate_sandwich():
    # monomials: sup is the coefficient modulus, exactly
    for coeff, alpha in [(ONE, (2,)), (Coefficient.general(0.5 - 1j), (1, 3)), (MINUS_ONE, (0, 0))]:
        P = MultiPolynomial(len(alpha), [(alpha, coeff)])
        oracle = coeff.modulus()
        lower = sup_lower_grid(P).lower
        upper = sup_upper_lipschitz(P).upper
        assert lower <= oracle + 1e-9 <= upper + 2e-9
        assert upper - lower < 0.05 * oracle + 1e-12

    # 1-variable polynomials of degree <= 8 against a dense-scan oracle
    rng = np.random.default_rng(5)
    for _ in range(10):
        degs = rng.choice(np.arange(0, 9), size=int(rng.integers(2, 7)), replace=False)
        P = MultiPolynomial(
            1, [((int(k),), Coefficient.root_of_unity(int(rng.integers(0, 32)), 32)) for k in degs]
        )
        thetas = np.linspace(0.0, 2 * math.pi, 100_000, endpoint=False)
        vals = np.zeros(thetas.size, dtype=complex)
        for alpha, c in P.items():
            vals += c.to_complex() * np.exp(1j * alpha[0] * thetas)
        oracle = float(np.max(np.abs(vals)))
        oracle_slack = curvature_bound(P) * (math.pi / 100_000) ** 2 / 2
        lower = sup_lower_grid(P).lower
        upper = sup_upper_lipschitz(P).upper
        assert lower <= oracle + oracle_slack + 1e-12
        assert oracle <= upper + 1e-9
        assert upper - lower < 0.05 * oracle

    # the worked 4-variable case against the analytic sup 2*sqrt(2)
    P = flat_polynomial(2, 2, "hadamard", 1).poly
    lower = sup_lower_grid(P).lower
    upper = sup_upper_lipschitz(P).upper
    assert lower <= TWO_SQRT2 + 1e-9 <= upper + 2e-9
    assert upper - lower < 0.05 * TWO_SQRT2


@criterion(6, "flow/grid consistency within 5%")
def test_criterion_06_flow_grid_consistency():
    t0 = time.time()
    report = exp.flow_grid_consistency(
        count=50, seed=0, max_frequency=30, flow_T=1e4, points_per_dim=32, refine_steps=3
    )
    assert report["max_relative_gap"] <= 0.05, report["max_relative_gap"]
    assert time.time() - t0 < 300


@criterion(7, "corona demo floor and common zero")
def test_criterion_07_corona_demo():
    t0 = time.time()
    report = exp.corona_demo()
    assert report["grid_min"] >= 1 / 9 - 1e-9
    assert report["common_zero"]["residual"] == 0.0
    assert time.time() - t0 < 10


@criterion(8, "coefficient-sum inequalities with certified sups")
def test_criterion_08_bohr_inequalities():
    corpus = exp.flat_corpus(STANDARD_CONFIGS)
    report = exp.verify_bohr_inequalities(corpus)
    assert report["passed"]

    from bohr_forge.norms import sup_upper_lipschitz as upper_fn

    pair = DirichletPolynomial.monomial(2) + DirichletPolynomial.monomial(3)
    cert = upper_fn(lift(pair), points_per_dim=512)
    tight = exp.verify_bohr_inequalities([exp.CorpusEntry("tight", pair, cert.upper, "lipschitz")])
    assert tight["passed"]
    ratio = tight["rows"][0]["prime_sum_ratio"]
    assert 0.99 <= ratio <= 1.0


@criterion(9, "radius-1/3 check on the Moebius family")
def test_criterion_09_bohr_radius():
    report = exp.mobius_radius_report(a_values=(0.5, 0.9, 0.99), degree=50)
    assert report["max_ratio"] <= 1 + 1e-9
    rows = {r["label"]: r for r in report["rows"]}
    # independent closed-form oracle a + (1 - a^2)/(3 - a)
    assert rows["moebius(a=0.9)"]["ratio"] == pytest.approx(0.9 + (1 - 0.81) / 2.1, abs=1e-9)
    assert rows["moebius(a=0.9)"]["ratio"] == pytest.approx(0.99048, abs=1e-3)


@criterion(10, "schedule trend toward sqrt(N) exp(-lambda)")
def test_criterion_10_schedule_trend():
    t0 = time.time()
    report = exp.schedule_report([10**3, 10**4, 10**5, 10**6, 10**7, 10**8])
    rows = report["rows"]
    assert all(r["admissible"] for r in rows)
    assert all(r["bound"] > 0 for r in rows)
    # the exponent comparison climbs toward 1 but is never asserted to reach it
    ratios = [r["log_ratio_inverse"] for r in rows if r["log_ratio_inverse"] is not None]
    assert len(ratios) >= 5
    assert all(ratio < 1 for ratio in ratios)
    assert ratios == sorted(ratios)
    assert time.time() - t0 < 60


@criterion(11, "random-model determinism and ratio band")
def test_criterion_11_random_model():
    a = exp.random_model(30, 2, trials=50, seed=11)
    b = exp.random_model(30, 2, trials=50, seed=11)
    assert canonical_json(a) == canonical_json(b)

    ratios = []
    for y in (20, 30, 50):
        rep = exp.random_model(y, 2, trials=50, seed=11)
        assert rep["relative_spread"] < 0.15
        ratios.append(rep["ratio"])
    assert max(ratios) / min(ratios) < 3
