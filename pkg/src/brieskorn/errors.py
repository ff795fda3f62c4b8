"""Exception hierarchy shared by all brieskorn modules."""


class BrieskornError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(BrieskornError, ValueError):
    """An argument violates a documented validity requirement."""


class UnsupportedLengthError(InvalidInputError):
    """The tuple length is outside the range an operation supports."""


class PreconditionError(InvalidInputError):
    """A structural precondition (coprimality, verdict, definedness) fails."""


class CapacityError(BrieskornError):
    """A configurable enumeration cap or search budget would be exceeded."""


class CertificateFormatError(InvalidInputError):
    """A persisted certificate line cannot be parsed; carries its line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number
