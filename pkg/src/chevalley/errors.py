"""Exception types shared across the package."""


class ChevalleyError(Exception):
    """Base class for all errors raised by this package."""


# fields
class NotPrime(ChevalleyError, ValueError):
    pass


class CharTwoForbidden(ChevalleyError, ValueError):
    pass


class FieldMismatch(ChevalleyError, TypeError):
    pass


class DivisionByZero(ChevalleyError, ZeroDivisionError):
    pass


# roots
class InadmissibleType(ChevalleyError, ValueError):
    pass


class DimensionMismatch(ChevalleyError, ValueError):
    pass


class NotARoot(ChevalleyError, ValueError):
    def __init__(self, message, coefficients=None):
        super().__init__(message)
        self.coefficients = coefficients


class ParseError(ChevalleyError, ValueError):
    def __init__(self, message, offset=None, line=None, column=None):
        loc = ""
        if offset is not None:
            loc = f" at offset {offset}"
            if line is not None:
                loc += f" (line {line}, column {column})"
        super().__init__(message + loc)
        self.offset = offset
        self.line = line
        self.column = column


# budgets
class BudgetExceeded(ChevalleyError, RuntimeError):
    pass


class ClosureBudgetExceeded(BudgetExceeded):
    pass


class SubgroupBudgetExceeded(BudgetExceeded):
    pass


# matrices and groups
class NotInvertible(ChevalleyError, ValueError):
    pass


class NeedsImaginaryUnit(ChevalleyError, ValueError):
    pass


class CharThreeForbiddenForG2(ChevalleyError, ValueError):
    pass


class ExtractionInconsistent(ChevalleyError, RuntimeError):
    pass


class UnsupportedFamily(ChevalleyError, ValueError):
    pass


class NotAnInvolution(ChevalleyError, ValueError):
    pass


# formulas
class UnknownName(ChevalleyError, KeyError):
    pass


# field interpretation
class EmptyCellSet(ChevalleyError, RuntimeError):
    pass


class NoValidB(ChevalleyError, RuntimeError):
    pass


class NoPartner(ChevalleyError, RuntimeError):
    pass


class AxiomFailure(ChevalleyError, RuntimeError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report or {}


class UsageError(ChevalleyError, ValueError):
    pass
