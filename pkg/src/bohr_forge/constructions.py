"""Flat-polynomial generators.

Two devices built from the same pattern, alternating a spectrum shift with the
action of a fixed Walsh matrix:

* the classical Rudin-Shapiro pair P_{n+1} = P_n + z^{2^n} Q_n,
  Q_{n+1} = P_n - z^{2^n} Q_n (and its Dirichlet twin, where the shift
  multiplies by p_{n+1}^{-s} instead of z^{2^n});
* the q-tuple scheme: starting from q constant polynomials, round k
  multiplies component j by the fresh variable z_{kq+j} and then applies a
  q x q Walsh matrix to the tuple. After d rounds each component is
  homogeneous of degree d in r = qd variables, has q^d unimodular
  coefficients, and its sup norm on the torus is at most q^{(d+1)/2}.

Pulling a tuple component back through z_j -> p_j^{-s} yields a Dirichlet
polynomial supported on squarefree frequencies with exactly d prime factors,
one from each index block {(k-1)q+1, ..., kq}.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .coeffs import ONE, Coefficient
from .errors import ConfigError, DomainError, FrequencyOverflowError, ResourceBudgetError
from .numtheory import first_primes
from .polys import FREQ_LIMIT, DirichletPolynomial, MultiPolynomial
from .walsh import WalshMatrix, hadamard, schur

RS_MAX_N = 24
DIRICHLET_RS_MAX_N = 15
TERM_BUDGET = 10**7


def rudin_shapiro(n: int) -> tuple[MultiPolynomial, MultiPolynomial]:
    """The degree 2^n - 1 pair with +-1 coefficients; P_0 = Q_0 = 1."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n > RS_MAX_N:
        raise ResourceBudgetError(f"rudin_shapiro({n}) would hold 2^{n} terms (cap n <= {RS_MAX_N})")
    P = MultiPolynomial(1, [((0,), ONE)])
    Q = P
    for k in range(n):
        shifted = Q.times_monomial((2**k,))
        P, Q = P + shifted, P + shifted.scale(-ONE)
    return P, Q


def dirichlet_rudin_shapiro(n: int) -> tuple[DirichletPolynomial, DirichletPolynomial]:
    """Same recursion with the shift p_{k+1}^{-s}; spectrum divides p_1...p_n."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n > DIRICHLET_RS_MAX_N:
        raise FrequencyOverflowError(
            f"dirichlet_rudin_shapiro({n}) overflows 64-bit frequencies (cap n <= {DIRICHLET_RS_MAX_N})"
        )
    primes = first_primes(n)
    P = DirichletPolynomial.monomial(1)
    Q = P
    for k in range(n):
        shifted = Q.times_frequency(primes[k])
        P, Q = P + shifted, P + shifted.scale(-ONE)
    return P, Q


def rudin_shapiro_sup_bound(n: int) -> float:
    """Declared sup bound 2^{(n+1)/2} from |P_n|^2 + |Q_n|^2 = 2^{n+1}."""
    return 2.0 ** ((n + 1) / 2)


@dataclass(frozen=True)
class FlatOutput:
    """One component of the shift-plus-Walsh tuple, with optional pull-back."""

    q: int
    d: int
    matrix_kind: str
    index: int
    poly: MultiPolynomial
    declared_sup_upper: float
    pullback: DirichletPolynomial | None = None
    spectrum_max: int | None = None

    def to_obj(self) -> dict:
        from .serialize import poly_to_obj

        obj = {
            "q": self.q,
            "d": self.d,
            "matrix": self.matrix_kind,
            "i": self.index,
            "declared_sup_upper": self.declared_sup_upper,
            "spectrum_max": self.spectrum_max,
            "poly": poly_to_obj(self.poly),
        }
        if self.pullback is not None:
            obj["pullback"] = poly_to_obj(self.pullback)
        return obj


def _walsh_for(q: int, matrix_kind: str) -> WalshMatrix:
    if matrix_kind == "hadamard":
        k = q.bit_length() - 1
        if q < 1 or 2**k != q:
            raise ConfigError(f"hadamard requires q to be a power of 2, got {q}")
        return hadamard(k)
    if matrix_kind == "schur":
        return schur(q)
    raise ConfigError(f"matrix_kind must be 'hadamard' or 'schur', got {matrix_kind!r}")


def flat_tuple(q: int, d: int, matrix_kind: str) -> list[MultiPolynomial]:
    """All q components after d shift-and-matrix rounds, in r = qd variables."""
    if q < 1:
        raise ConfigError(f"q must be positive, got {q}")
    if d < 0:
        raise DomainError(f"d must be nonnegative, got {d}")
    if q**d > TERM_BUDGET:
        raise ResourceBudgetError(f"q^d = {q**d} exceeds term budget {TERM_BUDGET}")
    A = _walsh_for(q, matrix_kind)
    r = q * d
    comps = [MultiPolynomial(r, [((0,) * r, ONE)]) for _ in range(q)]
    for k in range(d):
        shifted = []
        for j in range(q):
            e = [0] * r
            e[k * q + j] = 1
            shifted.append(comps[j].times_monomial(tuple(e)))
        comps = [
            _sum_disjoint(shifted[j].scale(A.entry(i, j)) for j in range(q))
            for i in range(q)
        ]
    return comps


def _sum_disjoint(polys) -> MultiPolynomial:
    # spectra are disjoint by construction (fresh variable per summand)
    acc = None
    for p in polys:
        acc = p if acc is None else acc + p
    return acc


def flat_polynomial(q: int, d: int, matrix_kind: str, index: int) -> FlatOutput:
    """Component ``index`` (1-based) of the tuple, with its declared sup bound."""
    if not 1 <= index <= q:
        raise ConfigError(f"index must lie in 1..{q}, got {index}")
    comps = flat_tuple(q, d, matrix_kind)
    return FlatOutput(
        q=q,
        d=d,
        matrix_kind=matrix_kind,
        index=index,
        poly=comps[index - 1],
        declared_sup_upper=float(q) ** ((d + 1) / 2),
    )


def flat_pullback(out: FlatOutput) -> FlatOutput:
    """Fill in the Dirichlet pull-back z_j -> p_j^{-s} and its max frequency."""
    r = out.q * out.d
    primes = first_primes(r)
    if r and primes[-1] ** max(out.d, 1) > FREQ_LIMIT:
        raise FrequencyOverflowError(f"p_{r}^{out.d} exceeds the 64-bit frequency bound")
    terms = []
    for alpha, c in out.poly.items():
        n = 1
        for p, e in zip(primes, alpha):
            if e:
                n *= p**e
        terms.append((n, c))
    pull = DirichletPolynomial(terms)
    return replace(out, pullback=pull, spectrum_max=pull.max_frequency)
