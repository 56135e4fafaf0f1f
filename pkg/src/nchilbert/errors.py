"""Exception types raised across the package."""


class NCHError(ValueError):
    """Base class for domain errors."""


class NotHermitian(NCHError):
    pass


class NotPositive(NCHError):
    pass


class Singular(NCHError):
    pass


class BadExponents(NCHError):
    """Exponent list or single exponent outside the admissible range."""


BadExponent = BadExponents


class ParseError(NCHError):
    pass


class PartitionMismatch(NCHError):
    pass


class UnknownCheck(NCHError):
    pass
