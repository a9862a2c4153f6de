"""Constant-coefficient 3D operators, characteristic triples and harmonic fields.

An operator of order n is a real combination of mixed partials
d^n / dx^alpha dy^beta dz^gamma with alpha + beta + gamma = n.  Applied
to an n-times differentiable monogenic map, every mixed partial
collapses to i2^beta * i3^gamma times the n-th derivative (factors on
the right for left maps), so the whole operator reduces to one algebra
product:

    L_n Phi = (sum C * i2^beta * i3^gamma) * Phi_n.

The parenthesized element is the operator's characteristic element for
a given triple.  Because i2 and i3 live in the commutative bicomplex
subalgebra it splits into two scalar conditions, one per coefficient
pair (a_k, b_k); a triple that zeroes both turns every sufficiently
smooth monogenic map into a solution of L_n U = 0, component by real
component.

Finding such triples reduces to root-finding: fix a candidate a, read
the characteristic equation as a polynomial in b, and solve.  The
module ships a simultaneous-iteration complex root solver, the Laplace
parametrization a = i*sin(t), b = i*cos(t), harmonic scalar fields
Re/Im F(x + i*y*sin(t) + i*z*cos(t)), and a finite-difference applier
that verifies any claimed solution numerically.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .algebra import Quaternion
from .analytic import AnalyticFunction, Polynomial
from .errors import DegeneratePolynomial, InvalidTriple, NoConvergence
from .mappings import GMonogenicMap, Side
from .space import Point3, Triple

# Durand-Kerner policy.
_ROOTS_MAX_ITER = 500
_ROOTS_UPDATE_TOL = 1e-13
_ROOTS_ANGLE_OFFSET = 0.4


@dataclass(frozen=True, slots=True)
class Term:
    """One mixed partial d^n/dx^alpha dy^beta dz^gamma with real weight c."""

    alpha: int
    beta: int
    gamma: int
    c: float

    def __post_init__(self) -> None:
        if min(self.alpha, self.beta, self.gamma) < 0:
            raise ValueError("derivative orders must be nonnegative")
        object.__setattr__(self, "c", float(self.c))


@dataclass(frozen=True, slots=True)
class PdeOperator:
    order: int
    terms: tuple[Term, ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("order must be positive")
        if not self.terms:
            raise ValueError("operator needs at least one term")
        seen = set()
        for t in self.terms:
            if t.alpha + t.beta + t.gamma != self.order:
                raise ValueError(
                    f"term {(t.alpha, t.beta, t.gamma)} does not sum to order {self.order}")
            key = (t.alpha, t.beta, t.gamma)
            if key in seen:
                raise ValueError(f"duplicate term {key}")
            seen.add(key)
        if all(t.c == 0 for t in self.terms):
            raise ValueError("operator needs a nonzero coefficient")


def laplace3d() -> PdeOperator:
    """d2/dx2 + d2/dy2 + d2/dz2."""
    return PdeOperator(2, (Term(2, 0, 0, 1.0), Term(0, 2, 0, 1.0), Term(0, 0, 2, 1.0)))


def example5() -> PdeOperator:
    """The non-elliptic fifth-order operator d5/dx5 + d5/dx dy2 dz2 + d5/dx dz4.

    Its real scalarization 1 + a^2 b^2 + b^4 is strictly positive even
    though the operator is not elliptic, so it still admits valid
    characteristic triples.
    """
    return PdeOperator(5, (Term(5, 0, 0, 1.0), Term(1, 2, 2, 1.0), Term(1, 0, 4, 1.0)))


PRESETS: dict[str, Callable[[], PdeOperator]] = {
    "laplace3d": laplace3d,
    "example5": example5,
}


def char_scalar(op: PdeOperator, a: complex, b: complex) -> complex:
    """sum C * a^beta * b^gamma, the per-pair characteristic value."""
    return sum((t.c * (complex(a) ** t.beta) * (complex(b) ** t.gamma)
                for t in op.terms), 0j)


def char_element(op: PdeOperator, triple: Triple) -> Quaternion:
    """sum C * i2^beta * i3^gamma, computed in the commutative subalgebra.

    Powers of bicomplex elements act componentwise, so the element is
    char_scalar(a1, b1)*e1 + char_scalar(a2, b2)*e2.
    """
    return Quaternion(char_scalar(op, triple.a1, triple.b1),
                      char_scalar(op, triple.a2, triple.b2), 0, 0)


def p_polynomial(op: PdeOperator, a: float, b: float) -> float:
    """Real scalarization sum C * a^beta * b^gamma for real arguments."""
    return math.fsum(t.c * (a ** t.beta) * (b ** t.gamma) for t in op.terms)


def p_scan(op: PdeOperator, radius: float, step: float
           ) -> tuple[float, tuple[float, float]]:
    """Grid scan of |P(a, b)| over [-radius, radius]^2.

    Returns (minimum, argmin).  A positive minimum is only heuristic
    evidence that P never vanishes on the reals; sampling cannot decide
    the global statement.
    """
    if radius <= 0 or step <= 0:
        raise ValueError("radius and step must be positive")
    n = round(radius / step)
    best = math.inf
    arg = (0.0, 0.0)
    for i in range(-n, n + 1):
        a = i * step
        for j in range(-n, n + 1):
            b = j * step
            value = abs(p_polynomial(op, a, b))
            if value < best:
                best = value
                arg = (a, b)
    return best, arg


def char_poly_in_b(op: PdeOperator, a: complex) -> Polynomial:
    """The characteristic equation read as a polynomial in b, for fixed a."""
    a = complex(a)
    coeffs = [0j] * (op.order + 1)
    for t in op.terms:
        coeffs[t.gamma] += t.c * a ** t.beta
    poly = Polynomial(tuple(coeffs))
    if not poly.coeffs:
        raise DegeneratePolynomial(
            f"characteristic polynomial vanishes identically at a={a!r}")
    return poly


def roots(poly: Polynomial, max_iter: int = _ROOTS_MAX_ITER,
          tol: float = _ROOTS_UPDATE_TOL) -> list[complex]:
    """All complex roots (with multiplicity) by simultaneous iteration.

    Starts from a circle of radius 1 + max|c|/|lead| with a fixed angle
    offset so real-coefficient symmetry cannot trap the iteration, then
    applies Durand-Kerner updates until the largest update is below tol.
    Deterministic for a given polynomial.
    """
    cs = poly.coeffs
    degree = len(cs) - 1
    if degree < 1:
        raise ValueError("polynomial must have degree at least 1")
    lead = cs[-1]
    monic = [c / lead for c in cs]

    def value(w: complex) -> complex:
        acc = 0j
        for c in reversed(monic):
            acc = acc * w + c
        return acc

    spread = 1.0 + max(abs(c) for c in cs) / abs(lead)
    zs = [spread * cmath.exp(1j * (2 * math.pi * k / degree + _ROOTS_ANGLE_OFFSET))
          for k in range(degree)]
    for _ in range(max_iter):
        worst = 0.0
        for i in range(degree):
            denom = 1 + 0j
            for j in range(degree):
                if j != i:
                    denom *= zs[i] - zs[j]
            if denom == 0:
                zs[i] += 1e-12  # nudge coincident iterates apart
                worst = math.inf
                continue
            update = value(zs[i]) / denom
            zs[i] -= update
            worst = max(worst, abs(update))
        if worst <= tol:
            return zs
    raise NoConvergence(f"root iteration did not settle in {max_iter} sweeps")


def _csin(t: complex) -> complex:
    # Exponential formula keeps sin^2 + cos^2 = 1 for complex arguments.
    return (cmath.exp(1j * t) - cmath.exp(-1j * t)) / 2j


def _ccos(t: complex) -> complex:
    return (cmath.exp(1j * t) + cmath.exp(-1j * t)) / 2


def laplace_triple(t: complex, tau: complex) -> Triple:
    """Harmonic triple a_k = i*sin, b_k = i*cos of the two parameters.

    Satisfies 1 + a_k^2 + b_k^2 = 0 for k = 1, 2, so the characteristic
    element of the 3D Laplacian vanishes on it.  Raises InvalidTriple for
    parameter pairs that break independence or surjectivity (for example
    equal real parameters).
    """
    triple = Triple(1j * _csin(t), 1j * _csin(tau), 1j * _ccos(t), 1j * _ccos(tau))
    report = triple.validate()
    if not report.ok:
        raise InvalidTriple(
            f"parameters t={t!r}, tau={tau!r} give an unusable triple: "
            + "; ".join(report.problems()))
    return triple


@dataclass(frozen=True, slots=True)
class ScalarField3:
    """Re or Im of F(x + i*y*sin(t) + i*z*cos(t)), with its provenance."""

    source: AnalyticFunction
    t: complex
    part: str

    def __post_init__(self) -> None:
        if self.part not in ("re", "im"):
            raise ValueError('part must be "re" or "im"')
        object.__setattr__(self, "t", complex(self.t))

    def argument(self, p: Point3) -> complex:
        x, y, z = p
        return x + 1j * y * _csin(self.t) + 1j * z * _ccos(self.t)

    def __call__(self, p: Point3) -> float:
        value = self.source(self.argument(p))
        return value.real if self.part == "re" else value.imag


def harmonic_solution(fn: AnalyticFunction, t: complex, part: str) -> ScalarField3:
    """Scalar field solving the 3D Laplace equation wherever fn is analytic."""
    return ScalarField3(fn, t, part)


def default_fd_step(order: int) -> float:
    # Rounding error in an order-n stencil grows like step^-n; larger
    # steps keep high-order residuals meaningful.
    return 1e-3 if order <= 2 else 5e-2


@lru_cache(maxsize=32)
def _cd_kernel(order: int) -> tuple[float, ...]:
    """Central-difference weights for one coordinate, second-order accurate.

    Built by convolving [1, -2, 1] blocks (plus one [-1/2, 0, 1/2] for odd
    orders); the offsets are symmetric around the center entry.
    """
    kernel = [1.0]
    for _ in range(order // 2):
        kernel = _convolve(kernel, [1.0, -2.0, 1.0])
    if order % 2:
        kernel = _convolve(kernel, [-0.5, 0.0, 0.5])
    return tuple(kernel)


def _convolve(a: list[float], b: list[float]) -> list[float]:
    out = [0.0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def apply_fd(op: PdeOperator, field: Callable[[Point3], object], p: Point3,
             step: float | None = None):
    """Apply the operator to any sampled field by composed central differences.

    Works for scalar fields and for quaternion-valued fields alike; the
    field values only need addition and scaling.  The default step depends
    on the operator order, see :func:`default_fd_step`.
    """
    h = default_fd_step(op.order) if step is None else step
    if h <= 0:
        raise ValueError("step must be positive")
    x, y, z = p
    total = None
    for term in op.terms:
        kx, ky, kz = _cd_kernel(term.alpha), _cd_kernel(term.beta), _cd_kernel(term.gamma)
        ox, oy, oz = len(kx) // 2, len(ky) // 2, len(kz) // 2
        acc = None
        for i, wx in enumerate(kx):
            if wx == 0.0:
                continue
            for j, wy in enumerate(ky):
                if wy == 0.0:
                    continue
                for l, wz in enumerate(kz):
                    if wz == 0.0:
                        continue
                    sample = field((x + (i - ox) * h, y + (j - oy) * h, z + (l - oz) * h))
                    piece = sample * (wx * wy * wz)
                    acc = piece if acc is None else acc + piece
        scaled = acc * (term.c / h ** op.order)
        total = scaled if total is None else total + scaled
    return total


def residual_via_formula(op: PdeOperator, mapping: GMonogenicMap, p: Point3) -> Quaternion:
    """L_n applied to a canonical map through the collapse identity.

    Computes char_element * Phi_n (right) or Phi_n * char_element (left),
    where Phi_n is the exact n-th derivative map evaluated at p.  Must
    agree with :func:`apply_fd` on the same field up to truncation error,
    and vanishes identically on characteristic triples.
    """
    nth = mapping.derivative(op.order).eval(p)
    ce = char_element(op, mapping.triple)
    if mapping.side is Side.RIGHT:
        return ce * nth
    return nth * ce
