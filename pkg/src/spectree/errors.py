"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A family/operation parameter violates its stated invariant."""


class Graph6Error(ValueError):
    """Malformed graph6 input. Carries the byte offset of the problem."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class CapExceededError(RuntimeError):
    """Input is larger than the configured exhaustive/exact-search cap."""


class BudgetExceededError(RuntimeError):
    """Search budget ran out before an exact answer was reached.

    Distinct from a negative answer: the caller must not treat this as
    "not contained".
    """


class BoundInapplicableError(ValueError):
    """A closed-form bound's validity condition fails for these parameters."""


class HypothesisViolationError(ValueError):
    """Input does not satisfy the hypothesis of the lemma/theorem machinery."""


class ConvergenceError(RuntimeError):
    """Eigensolver failed to reach the requested residual.

    Carries the best result seen so far in ``best``.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
