"""Exception types shared across the package."""


class FaddeevaError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(FaddeevaError, ValueError):
    """An argument is non-finite, out of range, or of the wrong kind."""


class DomainError(FaddeevaError, ValueError):
    """A caller violated an operation's domain contract."""


class PoleError(FaddeevaError, ZeroDivisionError):
    """Evaluation landed exactly on a pole of an expansion."""


class OracleError(FaddeevaError, RuntimeError):
    """A reference computation failed to reach its requested accuracy.

    ``index`` is the flat position of the failing point in its batch, when known.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index
