"""Exception types shared across the package."""


class WhlabError(Exception):
    """Base class for all whlab errors."""


class FieldMismatch(WhlabError):
    """Operands live over different fields."""


class CapMismatch(WhlabError):
    """Truncation caps or alphabet sizes disagree."""


class CharacteristicError(WhlabError):
    """Operation needs a division that the field characteristic forbids."""


class GroupTableError(WhlabError):
    """Multiplication table fails the group axioms, or a subset is not a subgroup."""


class NotAPGroup(WhlabError):
    """Group order is not a prime power (or not a power of the requested prime)."""


class NotNormal(WhlabError):
    """Subgroup is not normal in the ambient group."""


class BudgetExceeded(WhlabError):
    """A computation would exceed the configured resource budget."""


class ParseError(WhlabError):
    """Syntax or semantic error in an input file, with position information."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"line {line}" + (f", col {col}" if col is not None else "") + f": {message}"
        super().__init__(message)
