"""Exception hierarchy shared by all modules."""


class FeecError(Exception):
    """Base class for every error raised by symfeec."""


class CycloDivisionByZero(FeecError, ZeroDivisionError):
    pass


class EmptyRange(FeecError, ValueError):
    pass


class NotInjective(FeecError, ValueError):
    pass


class RangeMismatch(FeecError, ValueError):
    pass


class Overlap(FeecError, ValueError):
    pass


class DimensionMismatch(FeecError, ValueError):
    pass


class NotAFace(FeecError, ValueError):
    pass


class UnsupportedDegree(FeecError, ValueError):
    pass


class MixedSpace(FeecError, ValueError):
    pass


class DegreeTooLow(FeecError, ValueError):
    pass


class AmbiguousSet(FeecError, ValueError):
    pass


class NotInvariant(FeecError):
    """Raised when some generator maps an element outside the set (up to scalars)."""

    def __init__(self, message, generator=None, element=None):
        super().__init__(message)
        self.generator = generator
        self.element = element


class WrongSpace(FeecError, ValueError):
    pass


class SolveFailed(FeecError, ValueError):
    pass


class ZeroDegree(FeecError, ValueError):
    pass


class RankDeficient(FeecError):
    pass


class NotMonomial(FeecError):
    """No monomial (invariant) basis of the constant forms is available."""

    def __init__(self, message, n=None, k=None, chain=()):
        super().__init__(message)
        self.n = n
        self.k = k
        self.chain = tuple(chain)
