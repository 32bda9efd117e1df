"""Sparse Dirichlet polynomials and multivariate polynomials.

Both kinds store a map from index (frequency n >= 1, or exponent vector) to a
nonzero Coefficient, iterate in ascending / lexicographic order, and are
immutable values: every operation returns a new polynomial.
"""

from __future__ import annotations

from math import log, sqrt
from typing import Iterable, Iterator, Mapping

import numpy as np

from .coeffs import ONE, Coefficient
from .errors import DimensionError, DomainError, FrequencyOverflowError

FREQ_LIMIT = 2**63 - 1


def _merge(acc: dict, key, coeff: Coefficient) -> None:
    if key in acc:
        coeff = acc.pop(key) + coeff
    if not coeff.is_zero:
        acc[key] = coeff


class DirichletPolynomial:
    """Finite sum of a_n n^{-s}, stored as {frequency: Coefficient}."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Coefficient] | Iterable[tuple[int, Coefficient]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Coefficient] = {}
        for n, c in items:
            n = int(n)
            if n < 1:
                raise DomainError(f"frequencies must be positive, got {n}")
            if n > FREQ_LIMIT:
                raise FrequencyOverflowError(f"frequency {n} exceeds 2^63-1")
            _merge(acc, n, c)
        self._terms = dict(sorted(acc.items()))

    @staticmethod
    def monomial(n: int, coeff: Coefficient = ONE) -> "DirichletPolynomial":
        return DirichletPolynomial([(n, coeff)])

    def items(self) -> Iterator[tuple[int, Coefficient]]:
        return iter(self._terms.items())

    def coefficient(self, n: int) -> Coefficient:
        return self._terms.get(n, Coefficient.zero())

    @property
    def spectrum(self) -> tuple[int, ...]:
        return tuple(self._terms)

    @property
    def max_frequency(self) -> int:
        return max(self._terms) if self._terms else 0

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, DirichletPolynomial) and self._terms == other._terms

    def __add__(self, other: "DirichletPolynomial") -> "DirichletPolynomial":
        acc = dict(self._terms)
        for n, c in other._terms.items():
            _merge(acc, n, c)
        return DirichletPolynomial(acc)

    def scale(self, c: Coefficient) -> "DirichletPolynomial":
        return DirichletPolynomial((n, a * c) for n, a in self._terms.items())

    def times_frequency(self, n: int) -> "DirichletPolynomial":
        """Multiply by n^{-s}: shifts every frequency m to m*n."""
        n = int(n)
        if n < 1:
            raise DomainError(f"frequency factor must be positive, got {n}")
        out = {}
        for m, c in self._terms.items():
            mn = m * n
            if mn > FREQ_LIMIT:
                raise FrequencyOverflowError(f"frequency {m}*{n} exceeds 2^63-1")
            out[mn] = c
        return DirichletPolynomial(out)

    def partial_sum(self, N: int) -> "DirichletPolynomial":
        """Restriction to frequencies <= N."""
        return DirichletPolynomial((n, c) for n, c in self._terms.items() if n <= N)

    def wiener_norm(self):
        """Sum of coefficient moduli; an exact integer when all terms are roots."""
        return sum(c.modulus() for c in self._terms.values())

    def l2_norm(self) -> float:
        return sqrt(sum(c.modulus() ** 2 for c in self._terms.values()))

    def evaluate(self, s: complex) -> complex:
        """Plain term sum of a_n n^{-s}."""
        import cmath

        return sum((c.to_complex() * cmath.exp(-s * log(n)) for n, c in self._terms.items()), 0j)

    def evaluate_line(self, t: np.ndarray) -> np.ndarray:
        """Vectorized values f(it) along the imaginary axis."""
        t = np.asarray(t, dtype=float)
        if not self._terms:
            return np.zeros(t.shape, dtype=complex)
        logs = np.array([log(n) for n in self._terms], dtype=float)
        coeffs = np.array([c.to_complex() for c in self._terms.values()])
        return np.exp(-1j * np.outer(t, logs)) @ coeffs

    def __repr__(self) -> str:
        return f"DirichletPolynomial({len(self._terms)} terms, N={self.max_frequency})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c!r})*{n}^(-s)" for n, c in self._terms.items())


class MultiPolynomial:
    """Polynomial in var_count complex variables, {exponent tuple: Coefficient}."""

    __slots__ = ("_vars", "_terms")

    def __init__(
        self,
        var_count: int,
        terms: Mapping[tuple[int, ...], Coefficient] | Iterable[tuple[tuple[int, ...], Coefficient]] = (),
    ):
        var_count = int(var_count)
        if var_count < 0:
            raise DomainError("var_count must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, ...], Coefficient] = {}
        for alpha, c in items:
            alpha = tuple(int(e) for e in alpha)
            if len(alpha) != var_count:
                raise DimensionError(f"exponent vector {alpha} has length {len(alpha)}, expected {var_count}")
            if any(e < 0 for e in alpha):
                raise DomainError(f"exponents must be nonnegative, got {alpha}")
            _merge(acc, alpha, c)
        self._vars = var_count
        self._terms = dict(sorted(acc.items()))

    @staticmethod
    def constant(c: Coefficient, var_count: int = 0) -> "MultiPolynomial":
        return MultiPolynomial(var_count, [((0,) * var_count, c)])

    @staticmethod
    def monomial(alpha: tuple[int, ...], coeff: Coefficient = ONE) -> "MultiPolynomial":
        return MultiPolynomial(len(alpha), [(tuple(alpha), coeff)])

    @property
    def var_count(self) -> int:
        return self._vars

    def items(self) -> Iterator[tuple[tuple[int, ...], Coefficient]]:
        return iter(self._terms.items())

    def coefficient(self, alpha: tuple[int, ...]) -> Coefficient:
        return self._terms.get(tuple(alpha), Coefficient.zero())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPolynomial)
            and self._vars == other._vars
            and self._terms == other._terms
        )

    def degree(self) -> int:
        return max((sum(a) for a in self._terms), default=0)

    def is_homogeneous(self) -> bool:
        degrees = {sum(a) for a in self._terms}
        return len(degrees) <= 1

    def padded(self, var_count: int) -> "MultiPolynomial":
        """Same polynomial viewed in at least var_count variables."""
        if var_count <= self._vars:
            return self
        pad = (0,) * (var_count - self._vars)
        return MultiPolynomial(var_count, ((a + pad, c) for a, c in self._terms.items()))

    def __add__(self, other: "MultiPolynomial") -> "MultiPolynomial":
        # differing variable counts auto-pad to the larger one
        r = max(self._vars, other._vars)
        a, b = self.padded(r), other.padded(r)
        acc = dict(a._terms)
        for alpha, c in b._terms.items():
            _merge(acc, alpha, c)
        return MultiPolynomial(r, acc)

    def scale(self, c: Coefficient) -> "MultiPolynomial":
        return MultiPolynomial(self._vars, ((a, x * c) for a, x in self._terms.items()))

    def times_monomial(self, alpha: tuple[int, ...], coeff: Coefficient = ONE) -> "MultiPolynomial":
        """Multiply by coeff * z^alpha; pads variables if alpha is longer."""
        alpha = tuple(int(e) for e in alpha)
        r = max(self._vars, len(alpha))
        alpha = alpha + (0,) * (r - len(alpha))
        base = self.padded(r)
        return MultiPolynomial(
            r,
            (
                (tuple(e1 + e2 for e1, e2 in zip(a, alpha)), c * coeff)
                for a, c in base._terms.items()
            ),
        )

    def wiener_norm(self):
        return sum(c.modulus() for c in self._terms.values())

    def l2_norm(self) -> float:
        return sqrt(sum(c.modulus() ** 2 for c in self._terms.values()))

    def evaluate(self, z) -> complex:
        """Term sum at a point z of C^r (not restricted to the torus)."""
        z = tuple(z)
        if len(z) != self._vars:
            raise DimensionError(f"point has length {len(z)}, expected {self._vars}")
        total = 0j
        for alpha, c in self._terms.items():
            term = c.to_complex()
            for zj, e in zip(z, alpha):
                if e:
                    term *= complex(zj) ** e
            total += term
        return total

    def exponent_matrix(self) -> tuple[np.ndarray, np.ndarray]:
        """(terms x vars) exponent matrix and the coefficient vector."""
        nterms = len(self._terms)
        E = np.zeros((nterms, self._vars), dtype=np.int64)
        c = np.zeros(nterms, dtype=complex)
        for i, (alpha, coeff) in enumerate(self._terms.items()):
            E[i, :] = alpha
            c[i] = coeff.to_complex()
        return E, c

    def evaluate_torus(self, theta: np.ndarray) -> np.ndarray:
        """Values at torus points z_j = e^{i theta_j}; theta has shape (npts, var_count)."""
        theta = np.asarray(theta, dtype=float)
        if theta.ndim == 1:
            theta = theta[None, :]
        if theta.shape[1] != self._vars:
            raise DimensionError(f"points have {theta.shape[1]} angles, expected {self._vars}")
        if not self._terms:
            return np.zeros(theta.shape[0], dtype=complex)
        E, c = self.exponent_matrix()
        return np.exp(1j * (theta @ E.T.astype(float))) @ c

    def __repr__(self) -> str:
        return f"MultiPolynomial(vars={self._vars}, {len(self._terms)} terms, deg={self.degree()})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"

        def mono(alpha):
            parts = [f"z{j + 1}^{e}" if e > 1 else f"z{j + 1}" for j, e in enumerate(alpha) if e]
            return "*".join(parts) if parts else "1"

        return " + ".join(f"({c!r})*{mono(a)}" for a, c in self._terms.items())
