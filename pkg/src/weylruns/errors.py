"""Exceptions shared across the package."""


class DomainError(ValueError):
    """An argument is outside the documented domain of an operation."""


class IntegrityError(ArithmeticError):
    """An exact computation produced a structurally impossible result.

    Raised e.g. when an exponential generating function whose coefficients
    must count something yields a non-integer, which signals a wrong formula
    rather than a caller mistake.
    """
