"""Exception hierarchy shared by every module of the package."""


class HopfError(Exception):
    """Base class for all errors raised by hopfbraid."""


class DivisionByZero(HopfError, ZeroDivisionError):
    pass


class ZeroInput(HopfError, ValueError):
    pass


class InvalidSign(HopfError, ValueError):
    pass


class DimensionMismatch(HopfError, ValueError):
    pass


class NotAGroup(HopfError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class RewriteBudgetExceeded(HopfError):
    pass


class AmbiguousNormalForm(HopfError):
    pass


class BasisNotClosed(HopfError):
    def __init__(self, msg, product=None):
        super().__init__(msg)
        self.product = product


class AssociativityFailure(HopfError):
    pass


class NotInvertible(HopfError):
    pass


class GroupLikeVerificationFailed(HopfError):
    pass


class ComoduleAxiomFailed(HopfError):
    pass


class RelationFailed(HopfError):
    pass


class ParameterConstraintViolated(HopfError, ValueError):
    pass


class BraidingAxiomFailed(HopfError):
    pass


class LNotTwo(HopfError, ValueError):
    pass


class CoribbonAxiomFailed(HopfError):
    pass


class DrinfeldAxiomFailed(HopfError):
    pass


class RibbonAxiomFailed(HopfError):
    pass


class DivisionNotExact(HopfError, ArithmeticError):
    pass


class ParameterOutOfFamily(HopfError, ValueError):
    pass


class NotCentral(HopfError, ValueError):
    pass


class NotPivotal(HopfError, ValueError):
    pass


class IsoCheckFailed(HopfError):
    pass


class AutomorphismCheckFailed(HopfError):
    pass


class ClassificationMismatch(HopfError):
    pass
