"""Analytic functions of one complex variable with exact derivatives.

Mapping construction needs component functions that can be evaluated
anywhere in their domain and differentiated exactly any number of
times.  Four representations are enough and each is closed under
differentiation:

* :class:`Polynomial` -- coefficients in ascending degree, entire.
* :class:`PowerSeries` -- truncated Taylor series on a disc; evaluation
  is restricted to 90% of the stated radius and fails loudly when the
  truncated tail cannot be guaranteed small.
* :class:`ExpScaled` -- amplitude * exp(rate * w), entire.
* :class:`LinearCombination` -- finite sums of the above.

sin and cos are not primitives; :func:`sine` and :func:`cosine` build
them as combinations of two scaled exponentials, which keeps the family
closed and makes the identity sin^2 + cos^2 = 1 hold for complex
arguments.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Sequence

from .errors import OutOfDomain

# PowerSeries evaluation policy.
_SERIES_MAX_TERMS = 512
_SERIES_STOP_REL = 1e-17
_SERIES_TAIL_TOL = 1e-12
_SERIES_RADIUS_FRACTION = 0.9

_MAX_COMBINATION_DEPTH = 8


class AnalyticFunction:
    """Common interface: call to evaluate, :meth:`derivative` for exact derivatives."""

    def __call__(self, w: complex) -> complex:
        raise NotImplementedError

    def _derivative(self) -> AnalyticFunction:
        raise NotImplementedError

    def derivative(self, order: int = 1) -> AnalyticFunction:
        """Exact derivative of the given order, in the same representation family."""
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        fn: AnalyticFunction = self
        for _ in range(order):
            fn = fn._derivative()
        return fn


@dataclass(frozen=True, slots=True)
class Polynomial(AnalyticFunction):
    """Coefficients in ascending degree; trailing zeros are stripped."""

    coeffs: tuple[complex, ...] = ()

    def __post_init__(self) -> None:
        cs = tuple(complex(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, w: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * w + c
        return acc

    def _derivative(self) -> Polynomial:
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))


@dataclass(frozen=True, slots=True)
class PowerSeries(AnalyticFunction):
    """Truncated Taylor series around ``center`` with convergence radius ``radius``."""

    center: complex
    coeffs: tuple[complex, ...]
    radius: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))
        object.__setattr__(self, "radius", float(self.radius))
        if not self.radius > 0:
            raise ValueError("radius must be positive")

    def __call__(self, w: complex) -> complex:
        dist = abs(w - self.center)
        if dist > _SERIES_RADIUS_FRACTION * self.radius:
            raise OutOfDomain(
                f"|w - center| = {dist:.6g} exceeds "
                f"{_SERIES_RADIUS_FRACTION:g} * radius = "
                f"{_SERIES_RADIUS_FRACTION * self.radius:.6g}")
        dw = w - self.center
        total = 0j
        power = 1 + 0j
        term = 0j
        for c in self.coeffs[:_SERIES_MAX_TERMS]:
            term = c * power
            total += term
            if abs(term) < _SERIES_STOP_REL * abs(total):
                return total
            power *= dw
        # All stored terms used without the sum settling: bound the missing
        # tail by a geometric series with ratio dist/radius.
        ratio = dist / self.radius
        tail = abs(term) * ratio / (1.0 - ratio) if ratio < 1.0 else float("inf")
        if tail > _SERIES_TAIL_TOL:
            raise OutOfDomain(
                f"series tail bound {tail:.3g} exceeds {_SERIES_TAIL_TOL:g}; "
                "store more coefficients or evaluate closer to the center")
        return total

    def _derivative(self) -> PowerSeries:
        shifted = tuple(k * c for k, c in enumerate(self.coeffs) if k > 0)
        return PowerSeries(self.center, shifted, self.radius)


@dataclass(frozen=True, slots=True)
class ExpScaled(AnalyticFunction):
    """w -> amplitude * exp(rate * w)."""

    amplitude: complex
    rate: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "amplitude", complex(self.amplitude))
        object.__setattr__(self, "rate", complex(self.rate))

    def __call__(self, w: complex) -> complex:
        return self.amplitude * cmath.exp(self.rate * w)

    def _derivative(self) -> ExpScaled:
        return ExpScaled(self.amplitude * self.rate, self.rate)


@dataclass(frozen=True, slots=True)
class LinearCombination(AnalyticFunction):
    """Finite sum of weighted analytic functions; nesting depth is capped."""

    terms: tuple[tuple[complex, AnalyticFunction], ...]

    def __post_init__(self) -> None:
        normalized = tuple((complex(c), fn) for c, fn in self.terms)
        object.__setattr__(self, "terms", normalized)
        if _depth(self) > _MAX_COMBINATION_DEPTH:
            raise ValueError(f"combination nesting exceeds {_MAX_COMBINATION_DEPTH}")

    def __call__(self, w: complex) -> complex:
        return sum((c * fn(w) for c, fn in self.terms), 0j)

    def _derivative(self) -> LinearCombination:
        return LinearCombination(tuple((c, fn._derivative()) for c, fn in self.terms))


def _depth(fn: AnalyticFunction) -> int:
    if isinstance(fn, LinearCombination):
        return 1 + max((_depth(sub) for _, sub in fn.terms), default=0)
    return 0


ZERO_FUNCTION = Polynomial(())


def constant(value: complex) -> Polynomial:
    return Polynomial((value,))


def identity() -> Polynomial:
    return Polynomial((0, 1))


def monomial(degree: int, coefficient: complex = 1) -> Polynomial:
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    return Polynomial((0,) * degree + (coefficient,))


def exponential(rate: complex = 1, amplitude: complex = 1) -> ExpScaled:
    return ExpScaled(amplitude, rate)


def sine() -> LinearCombination:
    """sin w = (exp(iw) - exp(-iw)) / 2i."""
    return LinearCombination(((-0.5j, ExpScaled(1, 1j)), (0.5j, ExpScaled(1, -1j))))


def cosine() -> LinearCombination:
    """cos w = (exp(iw) + exp(-iw)) / 2."""
    return LinearCombination(((0.5, ExpScaled(1, 1j)), (0.5, ExpScaled(1, -1j))))


def scale(fn: AnalyticFunction, factor: complex) -> AnalyticFunction:
    """Multiply a function by a constant, staying within its representation."""
    factor = complex(factor)
    if factor == 0:
        return ZERO_FUNCTION
    if isinstance(fn, Polynomial):
        return Polynomial(tuple(factor * c for c in fn.coeffs))
    if isinstance(fn, PowerSeries):
        return PowerSeries(fn.center, tuple(factor * c for c in fn.coeffs), fn.radius)
    if isinstance(fn, ExpScaled):
        return ExpScaled(factor * fn.amplitude, fn.rate)
    if isinstance(fn, LinearCombination):
        return LinearCombination(tuple((factor * c, sub) for c, sub in fn.terms))
    raise TypeError(f"cannot scale {type(fn).__name__}")


def multiply(f: AnalyticFunction, g: AnalyticFunction) -> AnalyticFunction:
    """Pointwise product, when it stays inside the representation family.

    Supported: polynomial*polynomial, exponential*exponential (rates add),
    constants times anything, and distribution over linear combinations.
    Anything else (for example the product of two truncated series) has no
    exact representative here and raises ValueError.
    """
    if isinstance(f, Polynomial) and isinstance(g, Polynomial):
        if not f.coeffs or not g.coeffs:
            return ZERO_FUNCTION
        out = [0j] * (len(f.coeffs) + len(g.coeffs) - 1)
        for i, ci in enumerate(f.coeffs):
            for j, cj in enumerate(g.coeffs):
                out[i + j] += ci * cj
        return Polynomial(tuple(out))
    if isinstance(f, ExpScaled) and isinstance(g, ExpScaled):
        return ExpScaled(f.amplitude * g.amplitude, f.rate + g.rate)
    if isinstance(f, Polynomial) and f.degree <= 0:
        return scale(g, f.coeffs[0] if f.coeffs else 0)
    if isinstance(g, Polynomial) and g.degree <= 0:
        return scale(f, g.coeffs[0] if g.coeffs else 0)
    if isinstance(f, LinearCombination):
        return LinearCombination(tuple((c, multiply(sub, g)) for c, sub in f.terms))
    if isinstance(g, LinearCombination):
        return LinearCombination(tuple((c, multiply(f, sub)) for c, sub in g.terms))
    raise ValueError(
        f"product of {type(f).__name__} and {type(g).__name__} "
        "is not representable in the closed function family")


def lincomb(terms: Sequence[tuple[complex, AnalyticFunction]]) -> LinearCombination:
    return LinearCombination(tuple(terms))
