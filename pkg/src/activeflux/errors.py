"""Exception types shared across the solver."""


class SolverError(RuntimeError):
    """Base class for solver failures."""


class CflViolationError(SolverError):
    """A characteristic foot point left the one-cell reach allowed by the step."""


class StepFailureError(SolverError):
    """A time step produced non-finite values."""

    def __init__(self, message, stage=None):
        super().__init__(message)
        self.stage = stage
