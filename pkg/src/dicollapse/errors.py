"""Exception types raised by dicollapse."""


class DicollapseError(ValueError):
    """Base class for input errors; the CLI maps these to exit code 2."""


class DimensionMismatch(DicollapseError):
    pass


class NotInComplex(DicollapseError):
    pass


class NotAVertex(DicollapseError):
    pass


class OrderViolation(DicollapseError):
    pass


class NotMinimal(DicollapseError):
    pass


class NotFreePair(DicollapseError):
    pass


class InvalidProgram(DicollapseError):
    pass


class UnknownBuiltin(DicollapseError):
    pass


class UnsupportedDimension(DicollapseError):
    pass
