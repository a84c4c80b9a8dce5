"""Exception types shared by all solver modules."""


class InvalidParameterError(ValueError):
    """A parameter is outside its documented domain (e.g. k > n, eps not in (0,1))."""


class InfeasibleError(RuntimeError):
    """No solution exists for the given instance/parameters.

    For the exact-red-count variant the achievable range is attached as
    ``min_red`` / ``max_red``.
    """

    def __init__(self, message, *, min_red=None, max_red=None):
        super().__init__(message)
        self.min_red = min_red
        self.max_red = max_red


class ContractViolationError(RuntimeError):
    """An operation was invoked in a state its contract forbids
    (deleting an unmarked point, exceeding the deletion budget, ...)."""


class LaminarityError(ValueError):
    """A batch of 3-sided rectangles is not laminar; names the violating pair."""

    def __init__(self, message, index_a, index_b):
        super().__init__(message)
        self.index_a = index_a
        self.index_b = index_b


class PointParseError(ValueError):
    """A point file could not be parsed; carries the 1-based line number."""

    def __init__(self, message, line, field=None):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.field = field
