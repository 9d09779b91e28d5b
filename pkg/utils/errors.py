"""Exception hierarchy shared by every package"""

from typing import Optional


class DhGroebnerError(Exception):
    pass


class ContextMismatchError(DhGroebnerError, ValueError):
    pass


class ZeroPolynomialError(DhGroebnerError, ValueError):
    pass


class ArgumentError(DhGroebnerError, ValueError):
    pass


class PreconditionError(DhGroebnerError, ValueError):
    def __init__(self, message: str, offending=None):
        super().__init__(message)
        self.offending = offending


class SessionParseError(DhGroebnerError, ValueError):
    def __init__(self, message: str, line: int, column: Optional[int] = None):
        location = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{location}: {message}")
        self.line = line
        self.column = column
