"""Exception types shared across the package."""


class GMonogenicError(Exception):
    """Base class for all package-specific errors."""


class SingularElement(GMonogenicError):
    """Inversion was requested for a zero divisor (or an element too close to one)."""


class OutOfDomain(GMonogenicError):
    """A function was evaluated outside the domain its representation supports."""


class DegenerateSpectrum(GMonogenicError):
    """The two complex characters of a point coincide, so no separating contours exist."""


class DegeneratePolynomial(GMonogenicError):
    """A characteristic polynomial collapsed to the zero polynomial."""


class NoConvergence(GMonogenicError):
    """An iterative solver hit its iteration cap without converging."""


class InvalidTriple(GMonogenicError):
    """A spanning triple fails linear independence or the surjectivity condition."""
