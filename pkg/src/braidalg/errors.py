"""Exception hierarchy shared by all modules."""


class AlgebraError(Exception):
    pass


class NonInvertible(AlgebraError, ZeroDivisionError):
    pass


class FieldMismatch(AlgebraError, ValueError):
    pass


class ArityMismatch(AlgebraError, ValueError):
    pass


class ZeroPolynomial(AlgebraError, ValueError):
    pass


class NotHomogeneous(AlgebraError, ValueError):
    pass


class IndexOutOfRange(AlgebraError, IndexError):
    pass


class BadIndices(AlgebraError, ValueError):
    pass


class DimensionMismatch(AlgebraError, ValueError):
    pass


class NotInvolutive(AlgebraError, ValueError):
    pass


class CharTwoField(AlgebraError, ValueError):
    pass


class ZeroImage(AlgebraError, ValueError):
    pass


class NotAnAutomorphism(AlgebraError, ValueError):
    pass


class ParseError(AlgebraError, ValueError):
    """Input text did not match the grammar; ``pos`` is a 0-based column."""

    def __init__(self, message, text="", pos=0):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(self.__str__())

    def __str__(self):
        if not self.text:
            return self.message
        return f"{self.message} at column {self.pos + 1}\n  {self.text}\n  {' ' * self.pos}^"
