"""Exception types shared by all skewdist modules."""


class SkewdistError(Exception):
    """Base class for all library errors."""


class SizeError(SkewdistError, ValueError):
    """Incompatible or invalid array dimensions."""


class ParameterError(SkewdistError, ValueError):
    """Invalid algorithm parameter (rank, grade, block size, ...)."""


class InputError(SkewdistError, ValueError):
    """Input data violates a precondition (non-finite entries, not skew,
    near-singular transform, ...)."""


class NumericalError(SkewdistError, ArithmeticError):
    """A numerical kernel failed to converge or produced unusable output."""
