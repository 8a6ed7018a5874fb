"""Exception hierarchy shared by all hopfloop modules."""


class HopfloopError(Exception):
    pass


class FieldMismatch(HopfloopError):
    pass


class DivisionByZero(HopfloopError):
    pass


class DimMismatch(HopfloopError):
    pass


class MalformedTable(HopfloopError):
    pass


class NotIPLoop(HopfloopError):
    pass


class BudgetExceeded(HopfloopError):
    pass


class HMismatch(HopfloopError):
    pass


class InvalidInput(HopfloopError):
    pass


class HypothesisNotMet(HopfloopError):
    pass


class ParseError(HopfloopError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
