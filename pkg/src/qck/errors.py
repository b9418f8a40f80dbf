"""Exception types shared across the package."""


class QCKError(Exception):
    pass


class ShapeError(QCKError, ValueError):
    """A weight or vector has the wrong length."""


class DomainError(QCKError, ValueError):
    """An argument lies outside the domain of an operation."""


class LetterError(QCKError, ValueError):
    """A word contains a letter that is not in the base carrier."""


class CapExceeded(QCKError, RuntimeError):
    """A graph traversal hit its configured vertex cap."""
