"""Exception types shared across the package."""


class AlgebraError(ValueError):
    """Domain error raised by algebra operations on invalid input."""


class DimensionMismatch(AlgebraError):
    """Two objects with different ambient dimensions were combined."""

    def __init__(self, left: int, right: int):
        super().__init__(f"dimension mismatch: {left} != {right}")
        self.left = left
        self.right = right


class MetricError(AlgebraError):
    """The metric (or basis) failed validation."""
