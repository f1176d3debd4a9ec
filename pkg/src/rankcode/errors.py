"""Exception hierarchy.  The CLI maps these onto exit codes."""


class RankCodeError(Exception):
    """Base class for all package errors."""


class FieldError(RankCodeError):
    pass


class ShapeError(RankCodeError, ValueError):
    pass


class CodeError(RankCodeError, ValueError):
    pass


class BudgetExceeded(RankCodeError):
    """An exhaustive computation would exceed the enumeration budget."""


class FormatError(RankCodeError, ValueError):
    """Malformed input file.  ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
