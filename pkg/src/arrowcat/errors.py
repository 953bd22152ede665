"""Exception hierarchy shared by every module."""


class ArrowcatError(Exception):
    """Base class for all errors raised by arrowcat."""


class DimensionMismatch(ArrowcatError):
    pass


class ShapeMismatch(DimensionMismatch):
    pass


class NotSquare(ArrowcatError):
    pass


class NotInvertible(ArrowcatError):
    pass


class InvalidGroup(ArrowcatError):
    pass


class GenerationFailed(ArrowcatError):
    pass


class NotAdmitted(ArrowcatError):
    """A matrix is not a morphism of the ambient category."""


class NotComposable(ArrowcatError):
    pass


class SquareBroken(ArrowcatError):
    """A pair of components does not form a commuting square."""


class NotAFunctor(ArrowcatError):
    pass


class NotNatural(ArrowcatError):
    pass


class NotUnitary(ArrowcatError):
    pass


class NotMonoidal(ArrowcatError):
    pass


class NotMonoidalNatTrans(ArrowcatError):
    pass


class NoDual(ArrowcatError):
    pass


class NotAMorphism(ArrowcatError):
    """A matrix fails one of the structure-morphism squares."""


class ParseError(ArrowcatError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)


class ValidationError(ArrowcatError):
    pass


class UnknownSuite(ArrowcatError):
    pass
