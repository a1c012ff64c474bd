"""Exception hierarchy shared by all submodules."""


class JugglingError(Exception):
    """Base class for every error raised by this package."""


class PatternError(JugglingError, ValueError):
    pass


class CardinalityMismatch(PatternError):
    pass


class JugglingViolation(PatternError):
    def __init__(self, vertex: int, column: int):
        self.vertex = vertex
        self.column = column
        super().__init__(
            f"column {column} lies in J_{vertex} but {column + 1} is missing "
            f"from the next vertex"
        )


class OddAmbient(PatternError):
    pass


class ShapeMismatch(PatternError):
    pass


class RankTooLarge(PatternError):
    pass


class NotSymplectic(PatternError):
    pass


class InvalidMove(JugglingError, ValueError):
    pass


class NotApplicable(JugglingError, ValueError):
    pass


class InvariantViolation(JugglingError, RuntimeError):
    """A structural property the theory guarantees failed to hold.

    These are never recovered from; the CLI maps them to exit code 3.
    """


class NoProblemFound(InvariantViolation):
    pass


class UnpairedMove(InvariantViolation):
    pass


class OddSize(JugglingError, ValueError):
    pass


class SingularDiagonal(JugglingError, ValueError):
    pass


class MoveNotApplicable(JugglingError, ValueError):
    pass


class TruncationTooShallow(JugglingError, ValueError):
    pass


class IndexOutOfRange(JugglingError, ValueError):
    pass


class GoldenMismatch(JugglingError):
    def __init__(self, k: int, n: int, fields: list):
        self.k = k
        self.n = n
        self.fields = list(fields)
        super().__init__(f"(k={k}, n={n}) differs from reference in: {', '.join(self.fields)}")
