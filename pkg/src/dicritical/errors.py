"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class DicriticalError(Exception):
    """Base class for all errors raised by this package."""


class LoopArc(DicriticalError, ValueError):
    def __init__(self, u: int):
        super().__init__(f"loop arc ({u},{u}) is not allowed")
        self.u = u


class VertexOutOfRange(DicriticalError, ValueError):
    def __init__(self, u, n: int):
        super().__init__(f"vertex {u!r} outside range 0..{n - 1}")
        self.u = u
        self.n = n


class ParseError(DicriticalError, ValueError):
    pass


class InstanceTooLarge(DicriticalError):
    """An exact computation would exceed its configured budget."""


class ChiTooSmall(DicriticalError, ValueError):
    pass


class SizeTooSmall(DicriticalError, ValueError):
    pass


class ParityError(DicriticalError, ValueError):
    pass


class UnsupportedVariant(DicriticalError, ValueError):
    pass


class NotATournament(DicriticalError, ValueError):
    pass


class NotGallaiForest(DicriticalError, ValueError):
    pass


class NotAThread(DicriticalError, ValueError):
    pass


class InvalidColouring(DicriticalError, ValueError):
    pass


class RNotProper(DicriticalError, ValueError):
    pass


class EmptyRange(DicriticalError, ValueError):
    pass


class KTooSmall(DicriticalError, ValueError):
    pass
