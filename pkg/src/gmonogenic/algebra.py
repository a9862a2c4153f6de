"""Quaternions over the complex field, in the idempotent basis.

The algebra is spanned by four elements e1, e2, e3, e4 whose products
(row times column) are

           e1    e2    e3    e4
    e1  |  e1    0     e3    0
    e2  |  0     e2    0     e4
    e3  |  0     e3    0     e1
    e4  |  e4    0     e2    0

The unit element is e1 + e2, and e1, e2 are idempotents that annihilate
each other, so the algebra splits into two complex "planes" coupled by
the off-diagonal units e3 and e4.  The commutative subalgebra spanned by
e1, e2 is the bicomplex numbers.  Everything downstream (spanning
triples, monogenic mappings, characteristic equations) is phrased in
this basis; the classical basis {1, I, J, K} with I^2 = J^2 = K^2 = -1,
IJ = -JI = K is reachable through :class:`IjkQuaternion` and exists only
at I/O boundaries.

The algebra has two right maximal ideals (span{e2,e4} and span{e1,e3})
and two left maximal ideals (span{e2,e3} and span{e1,e4}); see
:class:`Ideal`.  Four linear functionals, one per ideal, read off the
complex coordinate that survives modulo that ideal; for elements of the
bicomplex subalgebra they are multiplicative in the appropriate order.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .errors import SingularElement

Scalar = int | float | complex

# |delta| below SINGULAR_SCALE * (1 + norm^2) is treated as non-invertible.
SINGULAR_SCALE = 1e-14


def _coerce(value: Scalar, name: str) -> complex:
    z = complex(value)
    if not cmath.isfinite(z):
        raise ValueError(f"coefficient {name} must be finite, got {z!r}")
    return z


@dataclass(frozen=True, slots=True)
class Quaternion:
    """Element a1*e1 + a2*e2 + a3*e3 + a4*e4 with complex coefficients."""

    a1: complex
    a2: complex
    a3: complex
    a4: complex

    def __post_init__(self) -> None:
        for name in ("a1", "a2", "a3", "a4"):
            object.__setattr__(self, name, _coerce(getattr(self, name), name))

    @property
    def coefficients(self) -> tuple[complex, complex, complex, complex]:
        return (self.a1, self.a2, self.a3, self.a4)

    def __add__(self, other: Quaternion) -> Quaternion:
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.a1 + other.a1, self.a2 + other.a2,
                          self.a3 + other.a3, self.a4 + other.a4)

    def __sub__(self, other: Quaternion) -> Quaternion:
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.a1 - other.a1, self.a2 - other.a2,
                          self.a3 - other.a3, self.a4 - other.a4)

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.a1, -self.a2, -self.a3, -self.a4)

    def __mul__(self, other: Quaternion | Scalar) -> Quaternion:
        if isinstance(other, Quaternion):
            return Quaternion(
                self.a1 * other.a1 + self.a3 * other.a4,
                self.a2 * other.a2 + self.a4 * other.a3,
                self.a1 * other.a3 + self.a3 * other.a2,
                self.a2 * other.a4 + self.a4 * other.a1,
            )
        if isinstance(other, (int, float, complex)):
            return Quaternion(self.a1 * other, self.a2 * other,
                              self.a3 * other, self.a4 * other)
        return NotImplemented

    def __rmul__(self, other: Scalar) -> Quaternion:
        # Scalars commute with everything; quaternion*quaternion goes via __mul__.
        if isinstance(other, (int, float, complex)):
            return self.__mul__(other)
        return NotImplemented

    def __truediv__(self, other: Scalar) -> Quaternion:
        if isinstance(other, (int, float, complex)):
            return Quaternion(self.a1 / other, self.a2 / other,
                              self.a3 / other, self.a4 / other)
        return NotImplemented

    def norm(self) -> float:
        """Euclidean norm sqrt(sum |a_k|^2); zero exactly at the zero element."""
        return math.sqrt(abs(self.a1) ** 2 + abs(self.a2) ** 2
                         + abs(self.a3) ** 2 + abs(self.a4) ** 2)

    def distance(self, other: Quaternion) -> float:
        return (self - other).norm()

    def is_zero(self, tol: float = 0.0) -> bool:
        return self.norm() <= tol

    def inverse(self) -> Quaternion:
        """Multiplicative inverse, when one exists.

        With delta = a1*a2 - a3*a4 (the determinant of the element's 2x2
        matrix picture), the inverse is (a2, a1, -a3, -a4)/delta.  Elements
        with |delta| <= SINGULAR_SCALE*(1 + norm^2) are rejected: they lie
        in (or too close to) the singular set of a maximal ideal.
        """
        delta = self.a1 * self.a2 - self.a3 * self.a4
        if abs(delta) <= SINGULAR_SCALE * (1.0 + self.norm() ** 2):
            raise SingularElement(f"element is not invertible (delta={delta!r})")
        return Quaternion(self.a2 / delta, self.a1 / delta,
                          -self.a3 / delta, -self.a4 / delta)

    def to_ijk(self) -> IjkQuaternion:
        """Coefficients of the same element in the classical basis {1, I, J, K}."""
        return IjkQuaternion(
            0.5 * (self.a1 + self.a2),
            0.5j * (self.a1 - self.a2),
            0.5j * (self.a3 + self.a4),
            0.5 * (self.a4 - self.a3),
        )

    def __repr__(self) -> str:
        return (f"Quaternion({self.a1!r}, {self.a2!r}, "
                f"{self.a3!r}, {self.a4!r})")


@dataclass(frozen=True, slots=True)
class IjkQuaternion:
    """The same algebra in the basis {1, I, J, K}; an I/O-boundary view."""

    q0: complex
    q1: complex
    q2: complex
    q3: complex

    def __post_init__(self) -> None:
        for name in ("q0", "q1", "q2", "q3"):
            object.__setattr__(self, name, _coerce(getattr(self, name), name))

    @property
    def coefficients(self) -> tuple[complex, complex, complex, complex]:
        return (self.q0, self.q1, self.q2, self.q3)

    def to_quaternion(self) -> Quaternion:
        """Inverse of :meth:`Quaternion.to_ijk`."""
        return Quaternion(
            self.q0 - 1j * self.q1,
            self.q0 + 1j * self.q1,
            -1j * self.q2 - self.q3,
            -1j * self.q2 + self.q3,
        )


ZERO = Quaternion(0, 0, 0, 0)
ONE = Quaternion(1, 1, 0, 0)
E1 = Quaternion(1, 0, 0, 0)
E2 = Quaternion(0, 1, 0, 0)
E3 = Quaternion(0, 0, 1, 0)
E4 = Quaternion(0, 0, 0, 1)

IJK_ONE = IjkQuaternion(1, 0, 0, 0)
IJK_I = IjkQuaternion(0, 1, 0, 0)
IJK_J = IjkQuaternion(0, 0, 1, 0)
IJK_K = IjkQuaternion(0, 0, 0, 1)


def f1(a: Quaternion) -> complex:
    """Right-multiplicative functional a1 + a3; annihilates Ideal.RIGHT_1."""
    return a.a1 + a.a3


def f2(a: Quaternion) -> complex:
    """Right-multiplicative functional a2 + a4; annihilates Ideal.RIGHT_2."""
    return a.a2 + a.a4


def fhat1(a: Quaternion) -> complex:
    """Left-multiplicative functional a1 + a4; annihilates Ideal.LEFT_1."""
    return a.a1 + a.a4


def fhat2(a: Quaternion) -> complex:
    """Left-multiplicative functional a2 + a3; annihilates Ideal.LEFT_2."""
    return a.a2 + a.a3


class Ideal(Enum):
    """The four maximal ideals, keyed by side and index."""

    RIGHT_1 = "right-1"  # span{e2, e4}
    RIGHT_2 = "right-2"  # span{e1, e3}
    LEFT_1 = "left-1"    # span{e2, e3}
    LEFT_2 = "left-2"    # span{e1, e4}


# Coefficients that must vanish for membership in each ideal.
_IDEAL_COMPLEMENT = {
    Ideal.RIGHT_1: ("a1", "a3"),
    Ideal.RIGHT_2: ("a2", "a4"),
    Ideal.LEFT_1: ("a1", "a4"),
    Ideal.LEFT_2: ("a2", "a3"),
}


def in_ideal(a: Quaternion, which: Ideal, tol: float = 0.0) -> bool:
    """True when the coefficients outside the ideal's span are all <= tol."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    return all(abs(getattr(a, name)) <= tol for name in _IDEAL_COMPLEMENT[which])


def ideal_split(a: Quaternion) -> tuple[Quaternion, Quaternion]:
    """Split a = e2*a + e1*a into its RIGHT_1 and RIGHT_2 ideal parts.

    The parts are (0, a2, 0, a4) and (a1, 0, a3, 0); their sum is exactly
    the input because e1 + e2 is the unit.
    """
    return (Quaternion(0, a.a2, 0, a.a4), Quaternion(a.a1, 0, a.a3, 0))
