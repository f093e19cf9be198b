"""Exception hierarchy.

Errors split into two families so the command line can map them onto exit
codes: ``DataError`` (bad or inconsistent input files) and ``NumericalError``
(the inputs parse but the math is degenerate).
"""


class MVFrontierError(Exception):
    pass


class DataError(MVFrontierError, ValueError):
    pass


class NumericalError(MVFrontierError, ArithmeticError):
    pass


class DimensionMismatch(MVFrontierError, ValueError):
    pass


class MissingColumn(DataError):
    pass


class BadRow(DataError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class DuplicateDate(DataError):
    def __init__(self, line, date):
        self.line = line
        self.date = date
        super().__init__(f"line {line}: duplicate date {date.isoformat()}")


class EmptyIntersection(DataError):
    pass


class AdjustedUnavailable(DataError):
    pass


class InsufficientData(DataError):
    pass


class NotPositiveDefinite(NumericalError):
    pass


class NonpositiveB(NumericalError):
    pass


class DegenerateFrontier(NumericalError):
    pass


class BadRange(MVFrontierError, ValueError):
    pass
