"""Walsh matrices: unimodular q x q matrices with A*A = qI.

Two constructions: the +-1 block recursion of size 2^k, and the root-of-unity
matrix a_ij = w^{ij} for a primitive q-th root w (row and column 0 all ones).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coeffs import MINUS_ONE, ONE, Coefficient
from .errors import ConfigError, ResourceBudgetError

HADAMARD_MAX_K = 20


@dataclass(frozen=True)
class WalshVerification:
    unimodular: bool
    orthogonal: bool
    max_residual: float

    @property
    def passed(self) -> bool:
        return self.unimodular and self.orthogonal


class WalshMatrix:
    """Square matrix of Coefficient entries; verification is separate."""

    __slots__ = ("_entries",)

    def __init__(self, entries):
        rows = tuple(tuple(row) for row in entries)
        q = len(rows)
        if q < 1 or any(len(row) != q for row in rows):
            raise ConfigError("entries must form a nonempty square matrix")
        self._entries = rows

    @property
    def q(self) -> int:
        return len(self._entries)

    def entry(self, i: int, j: int) -> Coefficient:
        return self._entries[i][j]

    def row(self, i: int) -> tuple[Coefficient, ...]:
        return self._entries[i]

    def to_numpy(self) -> np.ndarray:
        return np.array([[c.to_complex() for c in row] for row in self._entries])

    def is_sign_matrix(self) -> bool:
        return all(c == ONE or c == MINUS_ONE for row in self._entries for c in row)

    def apply(self, v: np.ndarray) -> np.ndarray:
        return self.to_numpy() @ np.asarray(v, dtype=complex)


def hadamard(k: int) -> WalshMatrix:
    """Size 2^k sign matrix from the block recursion [[A, A], [A, -A]]."""
    if k < 0:
        raise ConfigError(f"k must be nonnegative, got {k}")
    if k > HADAMARD_MAX_K:
        raise ResourceBudgetError(f"hadamard size 2^{k} exceeds cap 2^{HADAMARD_MAX_K}")
    rows = [[ONE]]
    for _ in range(k):
        rows = [row + row for row in rows] + [row + [-c for c in row] for row in rows]
    return WalshMatrix(rows)


def schur(q: int) -> WalshMatrix:
    """a_ij = w^{ij} with w = e^{2 pi i/q}, 0-based indices."""
    if q < 1:
        raise ConfigError(f"q must be positive, got {q}")
    return WalshMatrix(
        [[Coefficient.root_of_unity(i * j, q) for j in range(q)] for i in range(q)]
    )


def verify_walsh(A: WalshMatrix, tol: float = 1e-12) -> WalshVerification:
    """Check unimodular entries and A*A = qI.

    Sign matrices are checked in exact integer arithmetic (residual 0);
    anything else goes through complex conversion with the given tolerance.
    """
    q = A.q
    unimodular = all(c.is_root for row in (A.row(i) for i in range(q)) for c in row)
    if unimodular and A.is_sign_matrix():
        M = np.array([[1 if A.entry(i, j) == ONE else -1 for j in range(q)] for i in range(q)], dtype=np.int64)
        gram = M.T @ M
        residual = int(np.max(np.abs(gram - q * np.eye(q, dtype=np.int64))))
        return WalshVerification(unimodular=True, orthogonal=residual == 0, max_residual=float(residual))
    M = A.to_numpy()
    gram = M.conj().T @ M
    residual = float(np.max(np.abs(gram - q * np.eye(q))))
    return WalshVerification(unimodular=unimodular, orthogonal=residual <= tol, max_residual=residual)
