"""Exception types shared across the library.

Every rejected precondition has its own class so callers (and the CLI)
can distinguish failure modes without parsing messages.
"""


class TournamentError(Exception):
    """Base class for all library errors."""


# --- construction / validation ---------------------------------------------

class NotSquareError(TournamentError):
    """Input matrix is not square (or is empty)."""


class DiagonalSetError(TournamentError):
    """A diagonal entry of the dominance matrix is set."""


class NotAntisymmetricError(TournamentError):
    """Some pair has both orientations, or neither."""


class VertexOutOfRangeError(TournamentError):
    """A vertex label is outside 0..n-1."""


class SameVertexError(TournamentError):
    """An operation on a vertex pair received x == y."""


class TooSmallError(TournamentError):
    """The tournament is below the operation's minimum order."""


class TooLargeError(TournamentError):
    """The tournament exceeds the exact-mode cap."""


class ArcAbsentError(TournamentError):
    """A requested arc is not present with the stated orientation."""


class DeletesEverythingError(TournamentError):
    """Vertex deletion would leave no vertices."""


class BadSizeError(TournamentError):
    """A candidate module size is outside 2..n-1."""


# --- constructions ----------------------------------------------------------

class NotPrimeError(TournamentError):
    """Quadratic-residue construction needs a prime modulus."""


class WrongResidueClassError(TournamentError):
    """Modulus is not congruent to 3 mod 4, so -1 would be a square."""


class NotDoublyRegularError(TournamentError):
    """Operation requires a doubly regular tournament."""


class NotNearRegularError(TournamentError):
    """Operation requires a near-regular tournament."""


class WrongOrderError(TournamentError):
    """Vertex count is in the wrong congruence class for this operation."""


class PartitionMismatchError(TournamentError):
    """The supplied degree partition does not describe this tournament."""


class ConditionsViolatedError(TournamentError):
    """The separator conditions fail, so the extension is refused."""


class InvariantViolationError(TournamentError):
    """A matrix fails the skew/orthogonality invariants."""


class NotNormalizedError(TournamentError):
    """A skew matrix is valid but not in border-first normal form."""


# --- verify / cli -----------------------------------------------------------

class WrongShapeError(TournamentError):
    """Instance does not have the order/regularity the check expects."""


class TooLargeForExhaustiveError(TournamentError):
    """Exhaustive enumeration is capped at n <= 6."""


class ParseError(TournamentError):
    """A file failed to parse; carries 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
