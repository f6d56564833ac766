"""Exception hierarchy shared by every module of the package."""


class ArcsError(Exception):
    """Base class for all errors raised by planar_arcs."""


# field construction / arithmetic
class NonPrime(ArcsError, ValueError):
    pass


class ReducibleModulus(ArcsError, ValueError):
    pass


class DegreeMismatch(ArcsError, ValueError):
    pass


class DivisionByZero(ArcsError, ZeroDivisionError):
    pass


# plane geometry
class ZeroVector(ArcsError, ValueError):
    pass


class CoincidentPoints(ArcsError, ValueError):
    pass


class PointNotInArc(ArcsError, ValueError):
    pass


class InvalidArc(ArcsError, ValueError):
    """Raised when a point set that must be an arc is not one."""

    def __init__(self, violation):
        super().__init__(str(violation))
        self.violation = violation


# tangents, dual curve, socles, (t,t)-form
class DeficiencyZero(ArcsError, ValueError):
    pass


class ArcTooSmall(ArcsError, ValueError):
    pass


class SeedDependent(ArcsError, ValueError):
    pass


class NoSolution(ArcsError, RuntimeError):
    pass


class ScalingDegenerate(ArcsError, RuntimeError):
    pass


# curve finder
class BadParams(ArcsError, ValueError):
    pass


class BothZero(ArcsError, ValueError):
    pass


class AllGeneratorsZero(ArcsError, RuntimeError):
    pass


class EvenCharacteristic(ArcsError, ValueError):
    pass


class NotCoprime(ArcsError, ValueError):
    pass


class NoLambda(ArcsError, RuntimeError):
    pass


class ZeroPolynomial(ArcsError, ValueError):
    pass


class TooFewPoints(ArcsError, ValueError):
    pass


class NotFound(ArcsError, RuntimeError):
    def __init__(self, message, bounds=None):
        super().__init__(message)
        self.bounds = bounds


# search
class BudgetExceeded(ArcsError, RuntimeError):
    pass


class NotOddSquare(ArcsError, ValueError):
    pass


class NoValidH(ArcsError, RuntimeError):
    pass
