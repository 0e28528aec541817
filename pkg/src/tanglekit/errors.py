"""Exception hierarchy shared by every tanglekit module."""

from __future__ import annotations


class TanglekitError(Exception):
    """Base class for all library errors."""


class NonCoherentPhases(TanglekitError, ArithmeticError):
    """Two nonzero summands p*A^k, q*A^l with k != l (mod 4); the sum leaves Z[Phi]."""


class ResultNotInPhi(TanglekitError, ArithmeticError):
    """A cyclotomic value that should be a single p*A^k is spread over several axes."""


class PhaseIncoherence(TanglekitError):
    """No 8th root of unity turns the closure brackets into an integer matrix."""


class ShapeError(TanglekitError, ValueError):
    """Matrix or vector dimensions do not fit the operation."""


class BoundaryMismatch(TanglekitError, ValueError):
    """A diagram has the wrong number of boundary circles for the operation."""


class EmptyDiagram(TanglekitError, ValueError):
    """The bracket of the empty diagram is not defined here."""


class CrossingCapExceeded(TanglekitError, ValueError):
    """A state-enumerating evaluator was asked to handle too many crossings."""


class PatternMismatch(TanglekitError, ValueError):
    """A rewrite site does not match the move template."""


class SchemaError(TanglekitError, ValueError):
    """Serialized diagram does not follow the JSON schema."""


class PerfectMatchingError(SchemaError):
    """Some crossing port or boundary endpoint is used by zero or several arcs."""


class ExprSyntaxError(TanglekitError, ValueError):
    """Malformed tangle expression; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class ExprTypeError(TanglekitError, TypeError):
    """Well-formed expression whose operands have incompatible shapes."""
