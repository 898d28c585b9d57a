"""Exception hierarchy shared by all modules."""


class RCKostkaError(Exception):
    """Base class for all library errors."""


class NotAPartition(RCKostkaError):
    pass


class SizeMismatch(RCKostkaError):
    pass


class NegativeLevel(RCKostkaError):
    pass


class InvalidMatrix(RCKostkaError):
    pass


class ZeroPolynomial(RCKostkaError):
    pass


class ZeroKostka(RCKostkaError):
    pass


class FitFailure(RCKostkaError):
    pass


class RangeError(RCKostkaError):
    pass


class ShapeNotContained(RCKostkaError):
    pass


class ContentNotPartition(RCKostkaError):
    pass


class EnumerationCapExceeded(RCKostkaError):
    pass


class CapExceeded(RCKostkaError):
    pass


class NonIntegral(RCKostkaError):
    pass


class TooSmallN(RCKostkaError):
    pass


class UnsupportedN(RCKostkaError):
    pass


class NoStabilization(RCKostkaError):
    pass
