"""Exception hierarchy shared across the package."""


class ZdGraphError(Exception):
    """Base class for all package errors."""


class RingMismatchError(ZdGraphError, ValueError):
    """Operands live in different rings of integers."""


class NotInFamilyError(ZdGraphError, ValueError):
    """A matrix is not in one of the twisted-cubic vertex families."""


class ResourceBudgetExceeded(ZdGraphError, RuntimeError):
    """A search exceeded its node or element budget.

    ``budget`` is the limit that was hit; ``partial`` carries whatever
    bound was established before giving up (or None).
    """

    def __init__(self, message, budget=None, partial=None):
        super().__init__(message)
        self.budget = budget
        self.partial = partial


class ContractViolation(ZdGraphError, AssertionError):
    """A construction that should hold for every input did not."""
