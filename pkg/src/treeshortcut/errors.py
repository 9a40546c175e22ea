"""Exception taxonomy shared by the library and the CLI exit-code mapping."""


class InputError(ValueError):
    """Malformed or inconsistent input (bad tree, bad cost, bad parameters).

    CLI exit code 2.
    """

    def __init__(self, message: str, reason: str = "input"):
        super().__init__(message)
        self.reason = reason


class InternalError(AssertionError):
    """A guaranteed invariant failed to hold. CLI exit code 3."""


class MetricViolationError(ValueError):
    """Cost declared usable by the metric pipeline fails the graph-triangle
    inequality check. CLI exit code 4."""
