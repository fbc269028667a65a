"""Exception hierarchy shared by the solver modules and the CLI."""


class RindepError(Exception):
    """Base class for all errors raised by this package."""


class InputError(RindepError, ValueError):
    """Bad user input: out-of-range vertex ids, malformed files, bad parameters."""


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InternalInvariantError(RindepError, AssertionError):
    """A condition that holds for every correct run was violated (a bug)."""


class PromiseViolation(InternalInvariantError):
    """Refinement was handed a set Q that is not a cowitness.

    Carries the offending candidate set and the conflicted vertex whose
    removal left ``X - {w}`` r-dominating the whole graph (``w`` is None when
    the starting X was already captured).
    """

    def __init__(self, X, w=None):
        self.X = tuple(X)
        self.w = w
        if w is None:
            msg = f"X={list(self.X)} is already captured by Q"
        else:
            msg = (f"N_r(X - {{{w}}}) covers the whole graph for X={list(self.X)}; "
                   "the supplied Q is not a cowitness")
        super().__init__(msg)


class NonSparseInputError(RindepError):
    """The cowitness recursion exceeded its depth guard."""


class BudgetExceeded(RindepError):
    """A brute-force oracle refused an input larger than its budget."""
