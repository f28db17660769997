"""Exception hierarchy shared by every module of the package."""


class AlgebraError(Exception):
    """Base class for domain errors. ``witness`` holds an offending tuple when one exists."""

    def __init__(self, message="", witness=None):
        super().__init__(message)
        self.witness = witness


# polynomials
class ModulusMismatch(AlgebraError):
    pass


class DivisionByZeroPoly(AlgebraError, ZeroDivisionError):
    pass


class DegreeTooLarge(AlgebraError):
    pass


class ParseError(AlgebraError, ValueError):
    pass


# rings
class NotPrime(AlgebraError, ValueError):
    pass


class NotMonic(AlgebraError, ValueError):
    pass


class NotAUnit(AlgebraError):
    pass


class ZeroElement(AlgebraError):
    pass


class NotInIdeal(AlgebraError):
    pass


class SquarefreeViolation(AlgebraError):
    pass


# finite algebras
class NotALattice(AlgebraError):
    pass


class NotAMonoid(AlgebraError):
    pass


class ResiduationFails(AlgebraError):
    pass


class SizeTooLarge(AlgebraError):
    pass


class NotBL(AlgebraError):
    pass


class NoGreatestElement(AlgebraError):
    pass


class InconsistentProfile(AlgebraError):
    pass


# constructors / enumeration
class CapExceeded(AlgebraError):
    pass


class SizeOutOfRange(AlgebraError, ValueError):
    pass


class ScanViolation(AlgebraError):
    def __init__(self, message="", ring=None, check=None):
        super().__init__(message, witness=(ring, check))
        self.ring = ring
        self.check = check


# cipher
class UnknownSymbol(AlgebraError, ValueError):
    pass


class LengthOverflow(AlgebraError):
    pass


class MessageTooLong(AlgebraError):
    pass


class CandidateExplosion(AlgebraError):
    pass


class NoCandidates(AlgebraError):
    pass
