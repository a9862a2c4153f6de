"""Shared generators and oracles for the test suite."""

from __future__ import annotations

import random

import numpy as np

from gmonogenic import E1, E2, E3, E4, ONE, Polynomial, Quaternion, Triple


def unit_disc(rng: random.Random, radius: float = 1.0) -> complex:
    while True:
        z = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
        if abs(z) <= radius:
            return z


def random_quaternion(rng: random.Random, radius: float = 1.0) -> Quaternion:
    return Quaternion(unit_disc(rng, radius), unit_disc(rng, radius),
                      unit_disc(rng, radius), unit_disc(rng, radius))


def random_valid_triple(rng: random.Random) -> Triple:
    """A validated triple, rejected until it is comfortably non-degenerate."""
    while True:
        t = Triple(unit_disc(rng), unit_disc(rng), unit_disc(rng), unit_disc(rng))
        report = t.validate()
        if report.ok and report.max_abs_minor > 0.05:
            return t


def random_polynomial(rng: random.Random, degree: int,
                      min_lead: float = 0.3) -> Polynomial:
    coeffs = [unit_disc(rng) for _ in range(degree + 1)]
    while abs(coeffs[-1]) < min_lead:
        coeffs[-1] = unit_disc(rng)
    return Polynomial(tuple(coeffs))


def random_point(rng: random.Random, radius: float = 1.0) -> tuple[float, float, float]:
    return (rng.uniform(-radius, radius), rng.uniform(-radius, radius),
            rng.uniform(-radius, radius))


# --- independent oracles -------------------------------------------------

def to_matrix(q: Quaternion) -> np.ndarray:
    """2x2 complex matrix picture: e1, e2 on the diagonal, e3, e4 off it."""
    return np.array([[q.a1, q.a3], [q.a4, q.a2]], dtype=complex)


def from_matrix(m: np.ndarray) -> Quaternion:
    return Quaternion(m[0, 0], m[1, 1], m[0, 1], m[1, 0])


def inverse_by_linear_solve(a: Quaternion) -> Quaternion:
    """Solve a*x = 1 as a 4x4 complex linear system (test-only route)."""
    columns = [(a * e).coefficients for e in (E1, E2, E3, E4)]
    matrix = np.array(columns, dtype=complex).T
    rhs = np.array(ONE.coefficients, dtype=complex)
    x = np.linalg.solve(matrix, rhs)
    return Quaternion(*x)
