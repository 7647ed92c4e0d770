"""Exception hierarchy shared across the package."""


class GanzError(Exception):
    """Base class for every error raised by ganz."""


class DivisionByZero(GanzError, ZeroDivisionError):
    pass


class NegativeValuation(GanzError, ValueError):
    pass


class NonzeroValuation(GanzError, ValueError):
    pass


class NotDefinedAt(GanzError, ArithmeticError):
    """A rational function has a vanishing denominator at the point."""

    def __init__(self, point, message=None):
        self.point = point
        super().__init__(message or f"not defined at {point!r}")


class Indeterminate(NotDefinedAt):
    """Numerator and denominator both vanish; definedness is undecided."""


class LineInDenominatorLocus(GanzError, ArithmeticError):
    pass


class DegenerateDirection(GanzError, ArithmeticError):
    """The line b + t*d lies in the zero locus of a numerator or denominator."""


class ParseError(GanzError, ValueError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at position {position}")


class IndexOutOfRange(GanzError, IndexError):
    pass


class IdenticallyMinusOne(GanzError, ValueError):
    pass


class StructuralError(GanzError, ValueError):
    pass


class BudgetExceeded(GanzError, RuntimeError):
    pass


class DependentParities(GanzError, ValueError):
    def __init__(self, combination, message=None):
        self.combination = combination
        super().__init__(message or f"parities are dependent: {combination}")


class OrderNotFound(GanzError, RuntimeError):
    def __init__(self, residues, message=None):
        self.residues = residues
        super().__init__(message or "no catalog order makes every residue positive")


class CertificateFormatError(GanzError, ValueError):
    pass
