"""Exception hierarchy shared by all modules."""


class BaxterError(ValueError):
    """Base class for domain errors raised on invalid objects or arguments."""


class LimitExceeded(BaxterError):
    pass


class Malformed(BaxterError):
    pass


class NotDecomposable(BaxterError):
    pass


class NotComplete(BaxterError):
    pass


class SizeMismatch(BaxterError):
    pass


class NotBaxter(BaxterError):
    pass


class NotTwisted(BaxterError):
    pass


class NotAltBaxter(BaxterError):
    pass


class NotInImage(BaxterError):
    pass


class NotTwin(BaxterError):
    pass


class NotParsable(BaxterError):
    pass


class Inconsistent(BaxterError):
    pass


class Intersecting(BaxterError):
    pass


class BoxMismatch(BaxterError):
    pass


class NonExactDivision(ArithmeticError):
    pass


class NonIntegerResult(ArithmeticError):
    pass


class NotPalindromic(BaxterError):
    pass


class NotMember(BaxterError):
    pass


class NoPath(BaxterError):
    pass
