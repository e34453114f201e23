"""Exception types shared across the package."""


class ClosureOverflowError(RuntimeError):
    """Generated set exceeded its element budget (wrong generators or non-finite group)."""


class CapacityError(RuntimeError):
    """A computation was refused because the group exceeds a configured size limit."""


class BudgetExceededError(RuntimeError):
    """A bounded search ran out of its node/time budget; the result is inconclusive."""


class LedgerParseError(ValueError):
    """A claims ledger file could not be parsed."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number
