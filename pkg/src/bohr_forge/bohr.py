"""The Bohr correspondence between Dirichlet and multivariate polynomials.

A frequency n = p_1^{a_1} ... p_r^{a_r} maps to the monomial
z_1^{a_1} ... z_r^{a_r}; the inverse substitutes z_j = p_j^{-s}. The variable
count of a lifted polynomial is the number of primes up to the largest prime
actually dividing the spectrum, so trailing unused variables are never
materialized (a constant lifts to a constant in zero variables).
"""

from __future__ import annotations

from .errors import FrequencyOverflowError
from .numtheory import factorize, first_primes, primes_up_to
from .polys import FREQ_LIMIT, DirichletPolynomial, MultiPolynomial


def lift(f: DirichletPolynomial) -> MultiPolynomial:
    """Rewrite sum a_n n^{-s} as a polynomial in z_j = p_j^{-s}."""
    factored = {n: factorize(n) for n in f.spectrum}
    largest = max((fac.p_plus for n, fac in factored.items() if n > 1), default=None)
    if largest is None:
        r = 0
        index = {}
    else:
        table = primes_up_to(largest)
        r = len(table)
        index = {p: j for j, p in enumerate(table.primes)}
    terms = []
    for n, c in f.items():
        alpha = [0] * r
        for p, e in factored[n].factors:
            alpha[index[p]] = e
        terms.append((tuple(alpha), c))
    return MultiPolynomial(r, terms)


def unlift(P: MultiPolynomial) -> DirichletPolynomial:
    """Substitute z_j = p_j^{-s}; fails loudly if a frequency exceeds 2^63-1."""
    primes = first_primes(P.var_count)
    terms = []
    for alpha, c in P.items():
        n = 1
        for p, e in zip(primes, alpha):
            if e:
                n *= p**e
            if n > FREQ_LIMIT:
                raise FrequencyOverflowError(f"monomial {alpha} maps beyond 2^63-1")
        terms.append((n, c))
    return DirichletPolynomial(terms)
