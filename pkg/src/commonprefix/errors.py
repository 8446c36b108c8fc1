"""Exception types shared by every module."""


class InvalidInstance(ValueError):
    """An instance violates a structural invariant (tree shape, ids, labels)."""


class NotATreeError(InvalidInstance):
    pass


class NotBinaryError(InvalidInstance):
    pass


class NotAStarError(InvalidInstance):
    pass


class ParseError(InvalidInstance):
    """Malformed instance or solution text. ``lineno`` is 1-based or None."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class InvalidAssignment(ValueError):
    pass


class InfeasibleSolution(ValueError):
    """An NN chain is not nested, or a biclique is not complete."""


class SizeGuardExceeded(RuntimeError):
    """A solver refused an input because a measured size exceeds its guard."""

    def __init__(self, guard, measured, limit):
        self.guard = guard
        self.measured = measured
        self.limit = limit
        super().__init__(f"size guard '{guard}' exceeded: measured {measured} > limit {limit}")
