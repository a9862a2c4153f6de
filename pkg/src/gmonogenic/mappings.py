"""Right- and left-monogenic mappings built from four analytic functions.

A mapping is Gateaux-differentiable on the embedded 3D subspace when the
directional difference quotient converges to h*D (right case) or D*h
(left case) for a single element D.  Every such mapping on a suitable
domain is a combination of four analytic functions of the two complex
characters xi1, xi2:

    right:  F1(xi1)*e1 + F2(xi2)*e2 + F3(xi1)*e3 + F4(xi2)*e4
    left:   F1(xi1)*e1 + F2(xi2)*e2 + F3(xi2)*e3 + F4(xi1)*e4

:class:`GMonogenicMap` stores the side, the spanning triple and the four
functions, evaluates the canonical form, differentiates it exactly
(component functions are replaced by their derivatives), and can
re-evaluate itself through contour integrals around the two characters
as an independent cross-check.

The equivalent differential characterization is the Cauchy-Riemann-type
system  dPhi/dy = i2 * dPhi/dx,  dPhi/dz = i3 * dPhi/dx  (factors on the
right for the left case).  :func:`cr_residual` measures how badly an
arbitrary sampled field violates it, using second-order central
differences, and is the package's workhorse verifier.

Quaternion power series with the coefficient on the right (right case)
or left (left case) are monogenic; :class:`QuaternionSeries` converts
such a series to its canonical four-function form and can also be
summed directly, which gives a second, independent evaluation route.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .algebra import ONE, ZERO, Quaternion
from .analytic import (AnalyticFunction, Polynomial, PowerSeries,
                       ZERO_FUNCTION, multiply)
from .errors import DegenerateSpectrum, SingularElement
from .space import Point3, Triple

Field = Callable[[Point3], Quaternion]

DEFAULT_CR_STEP = 1e-5


class Side(Enum):
    RIGHT = "right"
    LEFT = "left"


def resolvent(triple: Triple, p: Point3, t: complex,
              tol: float = 1e-12) -> Quaternion:
    """(t - zeta)^{-1} = e1/(t - xi1) + e2/(t - xi2).

    Defined for every complex t off the two characters; raises
    SingularElement when t is within tol of either.
    """
    xi1, xi2 = triple.xi(p)
    if abs(t - xi1) <= tol or abs(t - xi2) <= tol:
        raise SingularElement(f"t={t!r} collides with a character of the point")
    return Quaternion(1.0 / (t - xi1), 1.0 / (t - xi2), 0, 0)


@dataclass(frozen=True, slots=True)
class GMonogenicMap:
    """Canonical monogenic mapping: a side, a valid triple and four functions."""

    side: Side
    triple: Triple
    f1: AnalyticFunction
    f2: AnalyticFunction
    f3: AnalyticFunction
    f4: AnalyticFunction

    def __post_init__(self) -> None:
        self.triple.require_valid()

    def _arguments(self, xi1: complex, xi2: complex) -> tuple[complex, ...]:
        # The side decides which character the e3/e4 components consume.
        if self.side is Side.RIGHT:
            return (xi1, xi2, xi1, xi2)
        return (xi1, xi2, xi2, xi1)

    def eval(self, p: Point3) -> Quaternion:
        xi1, xi2 = self.triple.xi(p)
        w1, w2, w3, w4 = self._arguments(xi1, xi2)
        return Quaternion(self.f1(w1), self.f2(w2), self.f3(w3), self.f4(w4))

    __call__ = eval

    def as_field(self) -> Field:
        return self.eval

    def derivative(self, order: int = 1) -> GMonogenicMap:
        """Gateaux derivative: each component function differentiated in place."""
        return GMonogenicMap(self.side, self.triple,
                             self.f1.derivative(order), self.f2.derivative(order),
                             self.f3.derivative(order), self.f4.derivative(order))

    def limit_probe(self, p: Point3, direction: Point3, eps: float) -> Quaternion:
        """Difference-quotient residual against the derivative, at scale eps.

        Returns (Phi(zeta + eps*h) - Phi(zeta))/eps - h*Phi'(zeta) for the
        right side (h on the other side for left), where h is the embedding
        of ``direction``.  For a twice-differentiable map the norm of the
        result shrinks linearly in eps.
        """
        if eps <= 0:
            raise ValueError("eps must be positive")
        x, y, z = p
        hx, hy, hz = direction
        shifted = (x + eps * hx, y + eps * hy, z + eps * hz)
        quotient = (self.eval(shifted) - self.eval(p)) * (1.0 / eps)
        h = self.triple.zeta(direction)
        d = self.derivative().eval(p)
        expected = h * d if self.side is Side.RIGHT else d * h
        return quotient - expected

    def both_sided(self, tol: float = 1e-12) -> bool:
        """True when the map is monogenic from both sides.

        Comparing the two canonical forms, that happens exactly when the
        e3 and e4 components are constants; checked by probing the
        derivatives of f3 and f4.
        """
        for fn in (self.f3, self.f4):
            dfn = fn.derivative()
            if any(abs(dfn(w)) > tol for w in _probe_points(fn)):
                return False
        return True

    def cauchy_eval(self, p: Point3, nodes: int = 64, tol: float = 1e-12) -> Quaternion:
        """Re-evaluate the map through two contour integrals.

        Each character gets a circle of radius min(1, |xi1 - xi2|/2)
        around it, small enough to exclude the other character, and the
        integrand pairs the resolvent with the two component functions
        analytic near that character.  The trapezoid rule on a circle
        converges spectrally, so the result must match :meth:`eval`.
        Raises DegenerateSpectrum when the characters coincide and no
        separating radius exists.
        """
        if nodes < 16:
            raise ValueError("nodes must be at least 16")
        xi1, xi2 = self.triple.xi(p)
        separation = abs(xi1 - xi2)
        if separation <= tol:
            raise DegenerateSpectrum(
                f"characters coincide at this point (|xi1 - xi2| = {separation:.3g})")
        radius = min(1.0, 0.5 * separation)
        # Component pairs analytic near each character, in their basis slots.
        if self.side is Side.RIGHT:
            pair1 = lambda t: Quaternion(self.f1(t), 0, self.f3(t), 0)
            pair2 = lambda t: Quaternion(0, self.f2(t), 0, self.f4(t))
        else:
            pair1 = lambda t: Quaternion(self.f1(t), 0, 0, self.f4(t))
            pair2 = lambda t: Quaternion(0, self.f2(t), self.f3(t), 0)
        total = ZERO
        for center, pair in ((xi1, pair1), (xi2, pair2)):
            for j in range(nodes):
                unit = cmath.exp(2j * math.pi * j / nodes)
                t = center + radius * unit
                if self.side is Side.RIGHT:
                    piece = resolvent(self.triple, p, t) * pair(t)
                else:
                    piece = pair(t) * resolvent(self.triple, p, t)
                total = total + (radius / nodes) * unit * piece
        return total


# Fixed probe set for entire functions; series are probed near their center.
_GENERIC_PROBES = (0.3 + 0.4j, -1.1 + 0.2j, 0.7 - 0.8j, 1.3 + 0.9j, -0.2 - 1.2j)


def _probe_points(fn: AnalyticFunction) -> tuple[complex, ...]:
    series = _find_series(fn)
    if series is not None:
        r = 0.3 * series.radius
        return tuple(series.center + r * cmath.exp(2j * math.pi * k / 5)
                     for k in range(5))
    return _GENERIC_PROBES


def _find_series(fn: AnalyticFunction) -> PowerSeries | None:
    if isinstance(fn, PowerSeries):
        return fn
    if hasattr(fn, "terms"):
        for _, sub in fn.terms:
            found = _find_series(sub)
            if found is not None:
                return found
    return None


@dataclass(frozen=True, slots=True)
class QuaternionSeries:
    """Finite power series sum(zeta^k * c_k) (right) or sum(c_k * zeta^k) (left)."""

    side: Side
    triple: Triple
    coeffs: tuple[Quaternion, ...]

    def __post_init__(self) -> None:
        self.triple.require_valid()

    def canonicalize(self) -> GMonogenicMap:
        """Collapse the series to its four-polynomial canonical form.

        zeta^k = xi1^k*e1 + xi2^k*e2, so multiplying by c_k on either side
        routes each coefficient component to a polynomial in one character:
        the e1/e3 slots collect c_k1/c_k3, the e2/e4 slots c_k2/c_k4, and
        the side is remembered by the map's evaluation wiring.
        """
        return GMonogenicMap(
            self.side, self.triple,
            Polynomial(tuple(c.a1 for c in self.coeffs)),
            Polynomial(tuple(c.a2 for c in self.coeffs)),
            Polynomial(tuple(c.a3 for c in self.coeffs)),
            Polynomial(tuple(c.a4 for c in self.coeffs)),
        )

    def evaluate(self, p: Point3) -> Quaternion:
        """Sum the series directly with algebra products (no canonical form)."""
        z = self.triple.zeta(p)
        total = ZERO
        power = ONE
        for c in self.coeffs:
            term = power * c if self.side is Side.RIGHT else c * power
            total = total + term
            power = power * z
        return total


def cr_residual(field: Field, side: Side, triple: Triple, p: Point3,
                step: float = DEFAULT_CR_STEP) -> tuple[float, float]:
    """Cauchy-Riemann-type defect of a sampled field at a point.

    Returns (|D_y F - i2*D_x F|, |D_z F - i3*D_x F|) for the right side,
    with the products reversed for the left side, all derivatives taken
    as second-order central differences of size ``step``.  Values on the
    order of step^2 certify monogenicity at the point; order-one values
    flag a genuine violation.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    x, y, z = p
    half = 0.5 / step
    dx = (field((x + step, y, z)) - field((x - step, y, z))) * half
    dy = (field((x, y + step, z)) - field((x, y - step, z))) * half
    dz = (field((x, y, z + step)) - field((x, y, z - step))) * half
    i2 = triple.direction2()
    i3 = triple.direction3()
    if side is Side.RIGHT:
        return ((dy - i2 * dx).norm(), (dz - i3 * dx).norm())
    return ((dy - dx * i2).norm(), (dz - dx * i3).norm())


def pointwise_product(a: GMonogenicMap, b: GMonogenicMap) -> Field:
    """The pointwise algebra product of two maps, as an opaque field.

    The product of two monogenic maps is generally NOT monogenic: the
    off-diagonal units mix components tied to different characters (for
    example e3 * (xi2*e4) = xi2*e1, which breaks the y-condition whenever
    a1 != a2).  The result is therefore returned as a plain field for
    :func:`cr_residual` to judge; the honest special case lives in
    :func:`bicomplex_product`.
    """
    if a.side is not b.side:
        raise ValueError("maps must share a side")
    if a.triple != b.triple:
        raise ValueError("maps must share a triple")

    def product(p: Point3) -> Quaternion:
        return a.eval(p) * b.eval(p)

    return product


def bicomplex_product(a: GMonogenicMap, b: GMonogenicMap) -> GMonogenicMap:
    """Product of two maps valued in the bicomplex subalgebra (e3 = e4 = 0).

    In that subalgebra the product is componentwise, F1*G1 over the first
    character and F2*G2 over the second, so the result is again canonical.
    """
    if a.side is not b.side:
        raise ValueError("maps must share a side")
    if a.triple != b.triple:
        raise ValueError("maps must share a triple")
    for m in (a, b):
        if not (_is_zero_function(m.f3) and _is_zero_function(m.f4)):
            raise ValueError("bicomplex product needs both maps to have zero "
                             "e3/e4 components; use pointwise_product instead")
    return GMonogenicMap(a.side, a.triple,
                         multiply(a.f1, b.f1), multiply(a.f2, b.f2),
                         ZERO_FUNCTION, ZERO_FUNCTION)


def _is_zero_function(fn: AnalyticFunction) -> bool:
    if isinstance(fn, Polynomial):
        return not fn.coeffs
    if isinstance(fn, PowerSeries):
        return all(c == 0 for c in fn.coeffs)
    if hasattr(fn, "amplitude"):
        return fn.amplitude == 0
    if hasattr(fn, "terms"):
        return all(c == 0 or _is_zero_function(sub) for c, sub in fn.terms)
    return False
