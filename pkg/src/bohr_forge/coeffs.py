"""Coefficient arithmetic that stays exact as long as the algebra permits.

A coefficient is an exact root of unity e^{2 pi i k/m} (stored as the reduced
pair (k, m)), an exact zero, or a general complex number. Products of roots
are again roots, so the shift-and-matrix constructions never leave the exact
regime. Sums of two roots are exact in the cases that actually occur there:
opposite roots cancel to the exact zero, and roots at angular distance 1/3 or
2/3 of a turn sum to another root (the hexagonal-lattice identities, e.g.
1 + w = -w^2 for a primitive cube root w). Any other sum degrades to a
general complex value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import cmath

from .errors import DomainError

_HALF = Fraction(1, 2)
_THIRD = Fraction(1, 3)
_TWO_THIRDS = Fraction(2, 3)
_SIXTH = Fraction(1, 6)
_FIVE_SIXTHS = Fraction(5, 6)

# quarter turns convert to exact machine complex values
_EXACT_QUARTERS = {
    (0, 1): (1 + 0j),
    (1, 2): (-1 + 0j),
    (1, 4): 1j,
    (3, 4): -1j,
}


@dataclass(frozen=True)
class Coefficient:
    """Exact root of unity when ``root`` is set, else the complex ``value``."""

    root: tuple[int, int] | None
    value: complex

    @staticmethod
    def root_of_unity(k: int, m: int) -> "Coefficient":
        if m < 1:
            raise DomainError(f"root order must be positive, got {m}")
        f = Fraction(int(k) % int(m), int(m))
        return Coefficient(root=(f.numerator, f.denominator), value=0j)

    @staticmethod
    def general(z: complex) -> "Coefficient":
        return Coefficient(root=None, value=complex(z))

    @staticmethod
    def zero() -> "Coefficient":
        return Coefficient(root=None, value=0j)

    @property
    def is_zero(self) -> bool:
        return self.root is None and self.value == 0

    @property
    def is_root(self) -> bool:
        return self.root is not None

    def fraction(self) -> Fraction:
        if self.root is None:
            raise DomainError("not an exact root of unity")
        return Fraction(*self.root)

    def to_complex(self) -> complex:
        if self.root is None:
            return self.value
        exact = _EXACT_QUARTERS.get(self.root)
        if exact is not None:
            return exact
        k, m = self.root
        return cmath.exp(2j * cmath.pi * k / m)

    def modulus(self) -> float:
        """Exactly 1 for roots and 0 for the zero (returned as ints)."""
        if self.root is not None:
            return 1
        if self.value == 0:
            return 0
        return abs(self.value)

    def conjugate(self) -> "Coefficient":
        if self.root is not None:
            k, m = self.root
            return Coefficient.root_of_unity(-k, m)
        return Coefficient.general(self.value.conjugate())

    def __neg__(self) -> "Coefficient":
        if self.root is not None:
            return _from_fraction(self.fraction() + _HALF)
        return Coefficient.general(-self.value)

    def __mul__(self, other: "Coefficient") -> "Coefficient":
        if self.is_zero or other.is_zero:
            return Coefficient.zero()
        if self.root is not None and other.root is not None:
            return _from_fraction(self.fraction() + other.fraction())
        return Coefficient.general(self.to_complex() * other.to_complex())

    def __add__(self, other: "Coefficient") -> "Coefficient":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.root is not None and other.root is not None:
            f1, f2 = self.fraction(), other.fraction()
            delta = (f1 - f2) % 1
            if delta == _HALF:
                return Coefficient.zero()
            if delta == _THIRD:
                return _from_fraction(f2 + _SIXTH)
            if delta == _TWO_THIRDS:
                return _from_fraction(f2 + _FIVE_SIXTHS)
        z = self.to_complex() + other.to_complex()
        return Coefficient.general(z)

    def __repr__(self) -> str:
        if self.root is not None:
            k, m = self.root
            if m == 1:
                return "1"
            if (k, m) == (1, 2):
                return "-1"
            return f"e(2pi*{k}/{m})"
        return repr(self.value)


def _from_fraction(f: Fraction) -> Coefficient:
    f %= 1
    return Coefficient(root=(f.numerator, f.denominator), value=0j)


ONE = Coefficient.root_of_unity(0, 1)
MINUS_ONE = Coefficient.root_of_unity(1, 2)
ZERO = Coefficient.zero()
