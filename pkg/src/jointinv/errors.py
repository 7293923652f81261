"""Exception types shared across the package."""


class ContextMismatchError(ValueError):
    """Two values built over different variable contexts were combined."""


class PoleError(ZeroDivisionError):
    """A denominator vanished at the requested evaluation point."""


class ExactDivisionError(ArithmeticError):
    """Internal: an exact polynomial division left a remainder."""


class ParseError(ValueError):
    """Syntax or lowering error, carrying a 1-based source position."""

    def __init__(self, message, line, col):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class SchemaError(ValueError):
    """A JSON document does not match its expected schema."""


class CatalogError(ValueError):
    """Unknown catalog name or invalid catalog arguments."""
