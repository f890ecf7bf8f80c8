"""Exception hierarchy shared by every module of the package."""


class ArrangementError(Exception):
    pass


class IntegralityViolation(ArrangementError, ArithmeticError):
    """An exact computation produced a non-integer where an integer is required."""


class DuplicateAbscissa(ArrangementError, ValueError):
    pass


class BudgetExceeded(ArrangementError, RuntimeError):
    """A brute-force oracle would exceed its configured work bound."""


class InvalidSamplePoint(ArrangementError, ValueError):
    pass


class HoldoutMismatch(ArrangementError):
    """The interpolant missed the extra evaluation point."""


class SanityCheckFailed(ArrangementError):
    pass


class NegativeRegionCount(ArrangementError):
    pass
