"""Exception hierarchy shared by all modules."""


class OneInfError(Exception):
    """Base class for all library errors."""


class IncompatibleFields(OneInfError):
    pass


class DivisionByZero(OneInfError, ZeroDivisionError):
    pass


class ImaginaryLayerPresent(OneInfError):
    pass


class DegreeBoundExceeded(OneInfError):
    pass


class ZeroLeadingTerm(OneInfError, ZeroDivisionError):
    pass


class LeadingCoefficientNotAPower(OneInfError):
    pass


class NoRealRoot(OneInfError):
    pass


class NotRational(OneInfError):
    pass


class NonConvergence(OneInfError):
    pass


class NotNilpotent(OneInfError):
    pass


class IdealWrongDimension(OneInfError):
    pass


class NoStableLattice(OneInfError):
    pass


class NotIntegral(OneInfError):
    pass


class IndexBoundExceeded(OneInfError):
    pass


class NotTransitive(OneInfError):
    pass


class OrderBoundExceeded(OneInfError):
    pass


class ProductOneViolated(OneInfError):
    pass


class ZeroFunction(OneInfError):
    pass


class DegreeMismatch(OneInfError):
    pass


class NoBranch(OneInfError):
    pass


class NonlinearObstruction(OneInfError):
    pass


class NoRationalizingTwist(OneInfError):
    def __init__(self, msg, demands=None):
        super().__init__(msg)
        self.demands = demands or {}


class KernelNotOnCurve(OneInfError):
    pass


class SingularCurve(OneInfError):
    pass


class ExpressionSyntaxError(OneInfError, ValueError):
    pass
