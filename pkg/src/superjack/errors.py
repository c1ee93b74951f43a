"""Exception hierarchy shared by every module of the package."""


class SuperJackError(Exception):
    """Base class for all errors raised by superjack."""


class InvalidInput(SuperJackError, ValueError):
    pass


class DivisionByZero(SuperJackError, ZeroDivisionError):
    pass


class PoleAtTheta(SuperJackError, ArithmeticError):
    """A rational function was evaluated at a root of its denominator."""


class NonGenericTheta(PoleAtTheta):
    """A construction that needs generic theta met a special value."""


class WeightMismatch(InvalidInput):
    pass


class CellOutOfDiagram(InvalidInput):
    pass


class NotInFatHook(InvalidInput):
    pass


class NotContained(InvalidInput):
    pass


class InvalidStep(InvalidInput):
    pass


class TooFewVariables(InvalidInput):
    pass


class UnsupportedHere(SuperJackError, NotImplementedError):
    pass


class InvariantViolation(SuperJackError, ArithmeticError):
    """An exactness guarantee (divisibility, symmetry, ...) failed."""


class NotInAlgebra(InvariantViolation):
    pass


class InternalInconsistency(SuperJackError, AssertionError):
    """Two independent computations of the same quantity disagree."""
