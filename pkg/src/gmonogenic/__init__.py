"""Monogenic mappings over complexified quaternions.

A small numerical library for the constructive theory of right- and
left-monogenic mappings on a real 3D subspace of the quaternions over
the complex field: the idempotent-basis algebra, spanning triples,
mappings assembled from four analytic functions of one complex
variable, Gateaux calculus with Cauchy-Riemann-type verification, and
the bridge from characteristic triples of constant-coefficient 3D
operators to explicit solution fields (notably 3D harmonic functions).
"""

from .algebra import (E1, E2, E3, E4, IJK_I, IJK_J, IJK_K, IJK_ONE, ONE,
                      ZERO, Ideal, IjkQuaternion, Quaternion, f1, f2, fhat1,
                      fhat2, ideal_split, in_ideal)
from .analytic import (AnalyticFunction, ExpScaled, LinearCombination,
                       Polynomial, PowerSeries, ZERO_FUNCTION, constant,
                       cosine, exponential, identity, lincomb, monomial,
                       multiply, scale, sine)
from .errors import (DegeneratePolynomial, DegenerateSpectrum,
                     GMonogenicError, InvalidTriple, NoConvergence,
                     OutOfDomain, SingularElement)
from .mappings import (GMonogenicMap, QuaternionSeries, Side,
                       bicomplex_product, cr_residual, pointwise_product,
                       resolvent)
from .pde import (PRESETS, PdeOperator, ScalarField3, Term, apply_fd,
                  char_element, char_poly_in_b, char_scalar, default_fd_step,
                  example5, harmonic_solution, laplace3d, laplace_triple,
                  p_polynomial, p_scan, residual_via_formula, roots)
from .space import LAPLACE_T0, Point3, Triple, TripleReport

__version__ = "0.1.0"

__all__ = [
    "AnalyticFunction", "DegeneratePolynomial", "DegenerateSpectrum",
    "E1", "E2", "E3", "E4", "ExpScaled", "GMonogenicError", "GMonogenicMap",
    "IJK_I", "IJK_J", "IJK_K", "IJK_ONE", "Ideal", "IjkQuaternion",
    "InvalidTriple", "LAPLACE_T0", "LinearCombination", "NoConvergence",
    "ONE", "OutOfDomain", "PRESETS", "PdeOperator", "Point3", "Polynomial",
    "PowerSeries", "QuaternionSeries", "ScalarField3", "Side",
    "SingularElement", "Term", "Triple", "TripleReport", "ZERO",
    "ZERO_FUNCTION", "Quaternion", "apply_fd", "bicomplex_product",
    "char_element", "char_poly_in_b", "char_scalar", "constant", "cosine",
    "cr_residual", "default_fd_step", "example5", "exponential", "f1", "f2",
    "fhat1", "fhat2", "harmonic_solution", "ideal_split", "identity",
    "in_ideal", "laplace3d", "laplace_triple", "lincomb", "monomial",
    "multiply", "p_polynomial", "p_scan", "pointwise_product",
    "residual_via_formula", "resolvent", "roots", "scale", "sine",
]
