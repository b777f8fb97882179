"""Exception hierarchy shared by every module of the package."""


class FriezeLinkError(ValueError):
    pass


class ZeroOverZero(FriezeLinkError):
    pass


class NegativeInput(FriezeLinkError):
    pass


class NotNeighbors(FriezeLinkError):
    pass


class NoParents(FriezeLinkError):
    pass


class InfiniteInput(FriezeLinkError):
    pass


class OutOfRange(FriezeLinkError):
    """Raised when an operation needs a fraction strictly inside (0, 1)."""


class NonPositive(FriezeLinkError):
    pass


class VariableMismatch(FriezeLinkError):
    pass


class OddExponent(FriezeLinkError):
    """A Laurent polynomial in A had an odd exponent where only even ones may occur."""


class TooManyCrossings(FriezeLinkError):
    pass


class NotTwoComponent(FriezeLinkError):
    pass


class InvalidQ(FriezeLinkError):
    pass
