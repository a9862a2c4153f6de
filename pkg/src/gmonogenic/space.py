"""The real 3D subspace of the algebra where mappings live.

A spanning triple fixes three direction vectors: the unit, plus two
elements of the bicomplex subalgebra with coefficients (a1, a2) and
(b1, b2).  A real point (x, y, z) embeds as the bicomplex element

    zeta = xi1*e1 + xi2*e2,   xi_k = x + y*a_k + z*b_k.

The two complex characters xi1, xi2 carry all the geometry: the
embedded point is invertible exactly when neither character vanishes,
and each character's zero set pulls back to a straight line in R^3.

A triple is usable for mapping construction only if (a) the three
directions are linearly independent over the reals and (b) each of the
coefficient pairs (a1, b1) and (a2, b2) contains a non-real number, so
the characters range over all of C.  :meth:`Triple.validate` checks
both and returns a report rather than raising; constructors that need a
valid triple call :meth:`Triple.require_valid`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import Quaternion
from .errors import InvalidTriple

Point3 = tuple[float, float, float]

# Threshold scale for the rank test and for the "non-real" check.
INDEPENDENCE_TOL = 1e-12
NONREAL_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class TripleReport:
    """Outcome of validating a spanning triple."""

    independent: bool
    surjective: bool
    max_abs_minor: float
    minor_threshold: float
    pair1_nonreal: bool
    pair2_nonreal: bool

    @property
    def ok(self) -> bool:
        return self.independent and self.surjective

    def problems(self) -> list[str]:
        issues = []
        if not self.independent:
            issues.append("directions are linearly dependent over the reals")
        if not self.pair1_nonreal:
            issues.append("both a1 and b1 are real, first character is not surjective")
        if not self.pair2_nonreal:
            issues.append("both a2 and b2 are real, second character is not surjective")
        return issues


def _det3(m: list[list[float]]) -> float:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


@dataclass(frozen=True, slots=True)
class Triple:
    """Coefficients of the two non-unit directions: i2 = a1*e1 + a2*e2, i3 = b1*e1 + b2*e2."""

    a1: complex
    a2: complex
    b1: complex
    b2: complex

    def __post_init__(self) -> None:
        for name in ("a1", "a2", "b1", "b2"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    def direction2(self) -> Quaternion:
        return Quaternion(self.a1, self.a2, 0, 0)

    def direction3(self) -> Quaternion:
        return Quaternion(self.b1, self.b2, 0, 0)

    def xi(self, p: Point3) -> tuple[complex, complex]:
        """The two complex characters of the embedded point."""
        x, y, z = p
        return (x + y * self.a1 + z * self.b1,
                x + y * self.a2 + z * self.b2)

    def zeta(self, p: Point3) -> Quaternion:
        """Embed (x, y, z) as xi1*e1 + xi2*e2."""
        xi1, xi2 = self.xi(p)
        return Quaternion(xi1, xi2, 0, 0)

    def on_singular_line(self, p: Point3, k: int, tol: float = 1e-12) -> bool:
        """True when the k-th character vanishes at p (k is 1 or 2).

        Equivalent to the pair of real equations
        x + y*Re(a_k) + z*Re(b_k) = 0 and y*Im(a_k) + z*Im(b_k) = 0
        that describe the line of non-invertible embedded points.
        """
        if k not in (1, 2):
            raise ValueError("k must be 1 or 2")
        if tol < 0:
            raise ValueError("tol must be nonnegative")
        return abs(self.xi(p)[k - 1]) <= tol

    def validate(self) -> TripleReport:
        """Rank and surjectivity checks; see the module docstring."""
        rows = [
            [1.0, 0.0, 1.0, 0.0],
            [self.a1.real, self.a1.imag, self.a2.real, self.a2.imag],
            [self.b1.real, self.b1.imag, self.b2.real, self.b2.imag],
        ]
        max_minor = 0.0
        for drop in range(4):
            cols = [c for c in range(4) if c != drop]
            minor = _det3([[row[c] for c in cols] for row in rows])
            max_minor = max(max_minor, abs(minor))
        n2 = math.sqrt(sum(v * v for v in rows[1]))
        n3 = math.sqrt(sum(v * v for v in rows[2]))
        threshold = INDEPENDENCE_TOL * max(1.0, n2 * n3)
        pair1 = (abs(self.a1.imag) > NONREAL_TOL) or (abs(self.b1.imag) > NONREAL_TOL)
        pair2 = (abs(self.a2.imag) > NONREAL_TOL) or (abs(self.b2.imag) > NONREAL_TOL)
        return TripleReport(
            independent=max_minor > threshold,
            surjective=pair1 and pair2,
            max_abs_minor=max_minor,
            minor_threshold=threshold,
            pair1_nonreal=pair1,
            pair2_nonreal=pair2,
        )

    def require_valid(self) -> Triple:
        report = self.validate()
        if not report.ok:
            raise InvalidTriple("; ".join(report.problems()))
        return self


# Harmonic triple with parameters t = 0, tau = pi/2 (second coefficient
# rounded to exact zero): characters xi1 = x + i*z, xi2 = x + i*y.
LAPLACE_T0 = Triple(0.0, 1j, 1j, 0.0)
