"""Exception types raised by the engine."""


class QuiverModError(Exception):
    pass


class NonPolynomial(QuiverModError, ArithmeticError):
    """A rational function was required to be a polynomial but is not."""


class CyclicQuiver(QuiverModError, ValueError):
    pass


class ZeroDimVector(QuiverModError, ValueError):
    pass


class NotCoprime(QuiverModError, ValueError):
    """Raised when a Betti interpretation is requested for a non-coprime d."""


class BudgetExceeded(QuiverModError, RuntimeError):
    pass


class InvalidInput(QuiverModError, ValueError):
    pass
