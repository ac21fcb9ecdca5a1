"""Exception hierarchy shared by the exact engine, the oracle and the CLI."""


class HeptagonError(Exception):
    """Base class for every error raised by the heptagon package."""


class FieldArithmeticError(HeptagonError, ArithmeticError):
    """Division by zero or a non-integral element where Z[rho] is required."""


class TagMismatchError(HeptagonError, ValueError):
    """Two quadratic-extension elements carry different square-root tags."""


class NotRealError(HeptagonError, ValueError):
    """A cyclotomic number is not fixed by complex conjugation."""


class EmbeddingError(HeptagonError, ValueError):
    """A numeric embedding of a discriminant is not a positive real."""


class UndecidedError(HeptagonError):
    """Neither a square root nor a nonsquare certificate was found."""


class ConvergenceError(HeptagonError, RuntimeError):
    """The Jacobi iteration hit its sweep cap."""


class SpectrumMismatchError(HeptagonError):
    """Exact and numeric spectra disagree beyond tolerance or in multiplicity."""


class GroupError(HeptagonError, ValueError):
    """Malformed group element or elements from different wreath variants."""


class MatrixShapeError(HeptagonError, ValueError):
    """Incompatible shapes or a singular system in exact linear algebra."""
