"""Exception hierarchy shared across the package.

Every error raised by the library derives from BigActionError, so callers
can catch one base class.  The subclasses mirror the failure modes of the
individual layers (field arithmetic, polynomial reduction, Ore division,
cover construction, classification tables, group closure).
"""


class BigActionError(Exception):
    """Base class for all library errors."""


class ContextMismatch(BigActionError):
    """Two values from different field contexts were combined."""


class NotInImage(BigActionError):
    """A polynomial (or constant) has no preimage under x -> x^p - x."""


class ConstantObstruction(NotInImage):
    """Only the constant term blocks the preimage; a degree-p constant
    extension of the coefficient field removes the obstruction."""

    def __init__(self, message, constant=None):
        super().__init__(message)
        self.constant = constant


class NotXSForm(BigActionError):
    """A polynomial is not of the shape X*S(X) + c*X with S additive."""


class DivisionByZero(BigActionError, ZeroDivisionError):
    """Right division by the zero Ore polynomial."""


class SplittingFieldNotFound(BigActionError):
    """No extension within the degree cap contains the full root space."""

    def __init__(self, message, required_degree=None):
        super().__init__(message)
        self.required_degree = required_degree


class InseparableInput(BigActionError):
    """Root-space computation received an Ore polynomial with a_0 = 0."""


class NonIntegerGenus(BigActionError):
    """The genus formula produced a non-integer (malformed cover data)."""


class NotExtendable(BigActionError):
    """A translation does not lift to an automorphism of the cover."""


class InvalidM(BigActionError):
    """Ratio threshold M outside the admissible interval (0, 4p/(p-1)^2]."""


class ConstraintViolated(BigActionError):
    """A classification-table constraint failed; the message names the row."""


class UnsupportedPrime(BigActionError):
    """The requested case is not defined at this characteristic."""


class EmptyParameterSet(BigActionError):
    """A table's root-set intersection is empty over the searched extensions."""


class MismatchError(BigActionError):
    """Strict verification failed; carries the full report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class CapExceeded(BigActionError):
    """Group closure exceeded the element cap."""


class InvalidFamilyPrime(BigActionError):
    """Special-curve family requested at an impossible characteristic."""
