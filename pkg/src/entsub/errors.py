"""Exception types raised across the package."""


class EntsubError(Exception):
    pass


class RangeError(EntsubError, ValueError):
    pass


class TotalMismatch(EntsubError, ValueError):
    pass


class ShapeMismatch(EntsubError, ValueError):
    pass


class DimsMismatch(EntsubError, ValueError):
    pass


class BadPartition(EntsubError, ValueError):
    pass


class ZeroState(EntsubError, ValueError):
    pass


class SpecMismatch(EntsubError, ValueError):
    pass


class TooFewTerms(EntsubError, ValueError):
    pass


class SchemeUnsupported(EntsubError, ValueError):
    pass


class RankDeficient(EntsubError):
    """Evaluation points do not give a spanning nUPB.

    ``points`` lists the offending points: exact duplicates when there are
    any, otherwise every point of the rejected set.
    """

    def __init__(self, message, points=()):
        super().__init__(message)
        self.points = list(points)


class ExhaustedRetries(EntsubError):
    pass
