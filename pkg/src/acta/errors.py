"""Exception hierarchy.  Every error raised by the library derives from ActaError."""

from __future__ import annotations


class ActaError(Exception):
    pass


class EntryOutOfRange(ActaError):
    pass


class NotAssociative(ActaError):
    def __init__(self, s: int, t: int, u: int):
        self.witness = (s, t, u)
        super().__init__(f"not associative: (s, t, u) = ({s}, {t}, {u})")


class NoIdentity(ActaError):
    pass


class EmptyAct(ActaError):
    pass


class NotUnital(ActaError):
    def __init__(self, a: int):
        self.witness = (a,)
        super().__init__(f"not unital: a·1 != a for a = {a}")


class NotCompatible(ActaError):
    def __init__(self, a: int, s: int, t: int):
        self.witness = (a, s, t)
        super().__init__(f"not compatible: (a·s)·t != a·(st) for (a, s, t) = ({a}, {s}, {t})")


class MixedMonoids(ActaError):
    pass


class MixedActs(ActaError):
    pass


class NotACongruence(ActaError):
    pass


class NotASubact(ActaError):
    pass


class SizeLimitExceeded(ActaError):
    pass


class NoZero(ActaError):
    pass


class NonZeroRequired(ActaError):
    pass


class NotInjective(ActaError):
    pass


class TooSmall(ActaError):
    pass


class EmptySubset(ActaError):
    pass


class FamilyMeetNotDiagonal(ActaError):
    pass


class ChainViolation(ActaError):
    pass


class CapExceeded(ActaError):
    pass


class ParseError(ActaError):
    pass
