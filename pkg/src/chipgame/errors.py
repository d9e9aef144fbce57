"""Exception hierarchy shared across the package.

Every domain failure derives from :class:`ChipGameError` so callers (CLI,
server) can distinguish bad input from genuine bugs with one except clause.
"""


class ChipGameError(Exception):
    """Base class for all chip-firing domain errors."""


# --- graph construction ---------------------------------------------------

class EmptyVertexSetError(ChipGameError):
    pass


class LoopEdgeError(ChipGameError):
    pass


class UnknownVertexError(ChipGameError):
    pass


class NonpositiveMultiplicityError(ChipGameError):
    pass


class DisconnectedError(ChipGameError):
    pass


class InvalidVertexNameError(ChipGameError):
    pass


class InvalidParameterError(ChipGameError):
    pass


# --- divisors and scripts -------------------------------------------------

class DuplicateAssignmentError(ChipGameError):
    pass


class GraphMismatchError(ChipGameError):
    pass


class EnumerationTooLargeError(ChipGameError):
    pass


# --- configurations -------------------------------------------------------

class VertexNotInSError(ChipGameError):
    pass


class QInSError(ChipGameError):
    pass


class EmptySError(ChipGameError):
    pass


class NegativeConfigurationError(ChipGameError):
    pass


# --- orientations ---------------------------------------------------------

class NotAnEdgeError(ChipGameError):
    pass


class ConflictingArcError(ChipGameError):
    pass


class PartialOrientationError(ChipGameError):
    pass


# --- search guards --------------------------------------------------------

class CeilingExceededError(ChipGameError):
    """Raised when a gonality search is capped below the true answer."""


class LoopLimitError(ChipGameError):
    """Diagnostic guard: an iteration ceiling was hit.

    Theory guarantees the firing loops terminate; hitting this limit means
    an implementation bug, so the error message carries the loop name.
    """


# --- serialization --------------------------------------------------------

class PayloadSyntaxError(ChipGameError):
    """Malformed payload text; carries a line number or JSON position."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class PayloadSemanticError(ChipGameError):
    """Well-formed payload describing an invalid object; carries a path."""

    def __init__(self, message, path=None):
        super().__init__(message if path is None else f"{path}: {message}")
        self.path = path


class KindMismatchError(ChipGameError):
    pass


# --- game sessions --------------------------------------------------------

class UnknownSessionError(ChipGameError):
    pass


class NothingToUndoError(ChipGameError):
    pass
