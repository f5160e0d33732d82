"""Exception hierarchy. Every error raised by the library derives from PermError."""


class PermError(ValueError):
    pass


class MalformedInput(PermError):
    pass


class NotAPermutation(PermError):
    pass


class PositionOutOfRange(PermError):
    pass


class SlotOutOfRange(PermError):
    pass


class NotSimple(PermError):
    pass


class SizeTooSmall(PermError):
    pass


class InvalidM(PermError):
    pass


class NotAPattern(PermError):
    pass


class NonSimpleBasisElement(PermError):
    pass


class TrivialBasisElement(PermError):
    pass


class CapRequired(PermError):
    pass


class SizeGuard(PermError):
    pass


class UnknownProperty(PermError):
    pass
