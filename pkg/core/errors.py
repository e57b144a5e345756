"""
Errors - exception hierarchy shared by every lctforge subsystem
Each error knows the process exit code the CLI maps it to
"""
from typing import Optional


class LctForgeError(Exception):
    """Base class for all lctforge errors."""

    exit_code = 1


class MathematicalError(LctForgeError):
    """Input is mathematically outside the supported domain."""

    exit_code = 2


class ResourceError(LctForgeError):
    """A configured resource cap was hit."""

    exit_code = 3


class InternalConsistencyError(LctForgeError):
    """Two independent computations disagreed (implementation bug signal)."""

    exit_code = 1


# --- parsing -------------------------------------------------------------

class IdealSyntaxError(MathematicalError):
    """Malformed ideal file, with 1-based line/column position."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(f"{message}{where}")


class UnknownVariableError(IdealSyntaxError):
    pass


class NegativeExponentError(IdealSyntaxError):
    pass


class ZeroGeneratorError(IdealSyntaxError):
    pass


# --- algebra -------------------------------------------------------------

class ZeroPolynomialError(MathematicalError):
    pass


class DimensionMismatchError(MathematicalError):
    pass


class ConstantPolynomialError(MathematicalError):
    pass


class SingularChangeError(MathematicalError):
    pass


class InfiniteColengthError(MathematicalError):
    pass


class NonIsolatedSingularityError(InfiniteColengthError):
    pass


class UnitIdealError(MathematicalError):
    """The ideal contains a unit; the invariants are undefined."""


class NotMonomialError(MathematicalError):
    pass


class ContainmentError(MathematicalError):
    pass


class EmptyInputError(MathematicalError):
    pass


class NegativeCoordinateError(MathematicalError):
    pass


class NonPositiveEntryError(MathematicalError):
    pass


class UnsupportedDimensionError(MathematicalError):
    """Facet enumeration only runs in small ambient dimensions."""


class EmptyRestrictionError(MathematicalError):
    """No generator survives the restriction to a variable subset."""


# --- resources -----------------------------------------------------------

class DegreeCapExceeded(ResourceError):
    def __init__(self, degree: int, cap: int):
        self.degree = degree
        self.cap = cap
        super().__init__(
            f"degree cap exceeded: reached degree {degree} > cap {cap} "
            "(non-finite colength or insufficient LCTFORGE_DEGREE_CAP)"
        )


class PowerCapExceeded(ResourceError):
    pass
