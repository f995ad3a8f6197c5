"""Exception hierarchy shared by every module."""


class MatspaceError(Exception):
    """Base class for all library errors."""


class UsageError(MatspaceError, ValueError):
    """Invalid arguments: wrong field, wrong shape, bad flag combination."""


class FieldMismatchError(UsageError, TypeError):
    """Arithmetic between elements of different fields."""


class PreconditionError(UsageError):
    """A documented hypothesis of an operation does not hold."""


class ResourceError(MatspaceError):
    """Refused because the requested work exceeds an explicit cap."""


class BudgetExhausted(MatspaceError):
    """A bounded search ran out of budget. Says nothing about existence."""


class NotSimultaneouslyDiagonalizable(MatspaceError):
    """Eigenspace refinement failed for a block."""

    def __init__(self, message, matrix_index=None, block_index=None):
        super().__init__(message)
        self.matrix_index = matrix_index
        self.block_index = block_index
