"""Error types and status values shared across monodec."""

from enum import Enum, IntEnum


class MonodecError(Exception):
    """Base class for all monodec errors."""


class ParseError(MonodecError, ValueError):
    """Raised when an ideal expression or corpus line cannot be parsed."""

    def __init__(self, message: str, position: int = 0, source: str = "") -> None:
        self.position = position
        self.source = source
        super().__init__(f"{message} (at position {position})")


class VariableMismatchError(MonodecError, ValueError):
    """Raised when monomials or ideals live over different variable sets."""


class NotSquarefreeError(MonodecError, ValueError):
    """Raised when an operation needs a squarefree ideal."""


class DegenerateIdealError(MonodecError, ValueError):
    """Raised when a proper nonzero ideal is required but the zero or unit ideal was given."""


class CertificateError(MonodecError, ValueError):
    """Raised when a certificate is malformed or does not match its subject."""


class OrderError(MonodecError, ValueError):
    """Raised when a variable, generator or facet order is not a permutation of its subject."""


class NotAVertexError(MonodecError, ValueError):
    """Raised when a vertex argument does not belong to the complex."""


class DegreeError(MonodecError, ValueError):
    """Raised when an operation needs generators of a particular degree."""


class ResourceCapError(MonodecError):
    """Raised when an input exceeds a configured resource cap."""

    def __init__(self, cap: str, limit: int, actual: int) -> None:
        self.cap = cap
        self.limit = limit
        self.actual = actual
        super().__init__(f"{cap} cap exceeded: {actual} > {limit}")


class Verdict(Enum):
    """Outcome of a decision procedure."""

    TRUE = "true"
    FALSE = "false"
    UNDECIDED = "undecided-cap"


class ExitCode(IntEnum):
    """Process exit codes of the monodec CLI."""

    SUCCESS = 0
    USAGE_ERROR = 1
    RESOURCE_CAP = 2
    EXPECTATION_MISMATCH = 3
    AUDIT_FAILURE = 4
