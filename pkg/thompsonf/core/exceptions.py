from typing import Optional, Sequence, Tuple


class ThompsonError(Exception):
    """
    Base class for every error raised by the library.

    Attributes:
        exit_code (int): Process exit code used by the command line when the
            error escapes a command.
    """
    exit_code = 1


class InputError(ThompsonError):
    """Malformed or invalid input (parse and validation failures)."""
    exit_code = 2


class MathError(ThompsonError):
    """Well-formed input on which the requested mathematics is undefined."""
    exit_code = 3


# ---------- input errors ----------
class NotDyadicError(InputError):
    pass


class FormatError(InputError):
    pass


class WordSyntaxError(InputError):
    """
    A group word could not be parsed.

    Attributes:
        position (int): Zero-based offset of the offending character.
    """
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InvalidElementError(InputError):
    pass


class NotMonotoneError(InvalidElementError):
    pass


class SlopeNotPowerOfTwoError(InvalidElementError):
    pass


class CoordinateOutOfRangeError(InvalidElementError):
    pass


class OutOfRangeError(InputError):
    pass


class BadInputError(InputError):
    pass


class UnboundNameError(InputError):
    def __init__(self, name: str):
        super().__init__(f"unbound generator name '{name}'")
        self.name = name


class NegativeIndexError(InputError):
    pass


# ---------- mathematical errors ----------
class NotPowerOfTwoError(MathError):
    pass


class NotFiniteIndexError(MathError):
    """
    The supplied generators span a sublattice of rank < 2.

    Attributes:
        generators (tuple): The phi-images that were supplied.
    """
    def __init__(self, generators: Sequence[Tuple[int, int]], message: Optional[str] = None):
        self.generators = tuple(tuple(v) for v in generators)
        listed = "; ".join(f"({x},{y})" for x, y in self.generators) or "none"
        super().__init__(
            message
            or f"generators [{listed}] span a rank < 2 subgroup of Z^2; "
               f"the subgroup they generate with F' has infinite index in F"
        )


class NotInOrbitalError(MathError):
    pass


class SupportOutOfRangeError(MathError):
    pass


class IterationCapExceededError(MathError):
    pass


class NotInCommutatorSubgroupError(MathError):
    pass


class NotInRectangularError(MathError):
    pass


class CertificateFailedError(MathError):
    def __init__(self, failed: Sequence[str]):
        self.failed = tuple(failed)
        super().__init__("certificate checks failed: " + ", ".join(self.failed))
