"""Exception hierarchy for skewgb."""


class SkewGbError(Exception):
    """Base class for all skewgb errors."""


class PresentationError(SkewGbError):
    """Invalid or mismatched ring presentation."""


class RegionError(SkewGbError):
    """Weight vector outside the required polyhedral region."""


class BudgetExceeded(SkewGbError):
    """A configurable step or degree budget was exhausted.

    Raised instead of returning a possibly wrong answer; carries the
    budget kind and limit so callers can report a structured failure.
    """

    def __init__(self, kind, limit):
        self.kind = kind
        self.limit = limit
        super().__init__(f"{kind} budget exceeded (limit {limit})")


class ParseError(SkewGbError):
    """Problem-file or expression syntax error, with position info."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" at line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(message + where)
