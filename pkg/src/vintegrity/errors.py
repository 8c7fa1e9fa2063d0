"""Error types shared across the package.

The CLI maps these onto exit codes: format errors exit 2, solver input
errors exit 3, size-cap errors exit 4.
"""


class GraphFormatError(ValueError):
    """Malformed graph text."""


class ExpressionFormatError(ValueError):
    """Malformed expression or decomposition text. Carries a byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class SolverInputError(ValueError):
    """A solver precondition does not hold (bad cover, bad weights, bad tree)."""


class SizeCapError(ValueError):
    """Input exceeds a configured enumeration cap."""
