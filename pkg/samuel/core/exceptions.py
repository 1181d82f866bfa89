from typing import Optional


class SamuelError(Exception):
    pass


class DimensionMismatch(SamuelError):
    pass


class ZeroIdealError(SamuelError):
    pass


class NotMPrimaryError(SamuelError):
    pass


class ContainmentError(SamuelError):
    pass


class CertificationError(SamuelError):
    def __init__(self, message: str, order: Optional[int] = None, power: Optional[int] = None):
        super().__init__(message)
        self.order = order
        self.power = power

    def __str__(self):
        message = super().__str__()
        if self.power is not None:
            message += f' (while computing power {self.power})'
        return message


class UnsupportedCharacteristic(SamuelError):
    pass


class TruncationMismatch(SamuelError):
    pass


class ExponentOverflow(SamuelError):
    """An exponent reached the monomial exponent limit"""
    pass


class NoPolynomialTail(SamuelError):
    pass


class ReductionNotVerified(SamuelError):
    pass


class TheoremViolation(SamuelError):
    """A proved statement failed on computed data, so some engine is wrong"""
    pass


class ProblemSpecError(SamuelError):
    pass


class PolynomialSyntaxError(ProblemSpecError):
    def __init__(self, message: str, position: int):
        super().__init__(f'{message} at offset {position}')
        self.position = position


class UnknownVariable(ProblemSpecError):
    pass


class ZeroPolynomialError(ProblemSpecError):
    pass


class OptionError(ProblemSpecError):
    pass
