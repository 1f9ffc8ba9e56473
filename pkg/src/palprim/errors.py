"""Exception types raised by the library."""


class FreeGroupError(ValueError):
    """Base class for every error raised by palprim."""


class RankError(FreeGroupError):
    """A letter lies outside the rank, or two words have different ranks."""


class NotReduced(FreeGroupError):
    pass


class CancellationAtSeam(FreeGroupError):
    """A concatenation asserted to be cancellation-free is not."""


class NotCyclicallyReduced(FreeGroupError):
    pass


class EmptyWord(FreeGroupError):
    pass


class ParseError(FreeGroupError):
    pass


class NotCoprime(FreeGroupError):
    pass


class ZeroPair(FreeGroupError):
    pass


class EvenSum(FreeGroupError):
    """X + Y is even, so the class holds no palindrome."""


class OddSum(FreeGroupError):
    """X + Y is odd, so the class holds a palindrome instead."""


class BadDeterminant(FreeGroupError):
    pass


class PreconditionViolated(FreeGroupError):
    pass


class NotPrimitive(FreeGroupError):
    pass
