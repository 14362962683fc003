"""Exception hierarchy shared by all qtm modules."""


class QtmError(Exception):
    """Base class for every error raised by this package."""


class ModelError(QtmError):
    """A trend model violates a structural invariant."""


class DuplicateVariableError(ModelError):
    """The same variable name is declared twice."""


class UndeclaredVariableError(ModelError):
    """A relation endpoint does not name a declared variable."""


class SelfRelationError(ModelError):
    """A relation couples a variable with itself."""


class ParseError(QtmError):
    """Malformed model text. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownRelationTypeError(ParseError):
    """A relation line uses a type outside the supported eight."""


class MatrixError(QtmError):
    """A correlation matrix violates its invariants."""


class MatrixFormatError(MatrixError):
    """A correlation CSV file is malformed."""


class NotSquareError(MatrixError):
    """The matrix is not n-by-n for the declared variable names."""


class NotSymmetricError(MatrixError):
    """The matrix is not symmetric within tolerance."""


class DiagonalNotUnitError(MatrixError):
    """A diagonal entry differs from 1 beyond tolerance."""


class EntryOutOfRangeError(MatrixError):
    """An entry lies outside [-1, 1]."""


class NoRectificationPossibleError(QtmError):
    """No removal of relation rows can make the model non-restrictive."""


class UnknownNodeError(QtmError):
    """A graph query names a scenario index that is not a node."""


class NeutralDesireError(QtmError):
    """A trend grade was requested against a neutral desire."""


class NoObjectivesError(QtmError):
    """Ranking was requested for a model with no desired trends."""
