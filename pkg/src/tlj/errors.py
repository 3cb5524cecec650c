"""Exception hierarchy shared by every module of :mod:`tlj`."""


class TLError(Exception):
    """Base class for all library errors."""


class ShapeMismatch(TLError, ValueError):
    pass


class IndexOutOfRange(TLError, IndexError):
    pass


class NotAdmissible(TLError, ValueError):
    pass


class LabelOutOfRange(TLError, ValueError):
    pass


class DivisionByZero(TLError, ZeroDivisionError):
    pass


class DenominatorVanishes(DivisionByZero):
    """A rational function has a pole at the requested root of unity."""


class ParseError(TLError, ValueError):
    pass


class NonPlanarEmbedding(TLError, ValueError):
    pass


class InvalidDegree(TLError, ValueError):
    pass


class EulerMismatch(TLError, ValueError):
    pass


class InvalidEdge(TLError, ValueError):
    pass


class DegenerateGram(TLError, ArithmeticError):
    pass
