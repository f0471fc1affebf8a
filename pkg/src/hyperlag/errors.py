"""Exception types shared across the package."""


class InputError(ValueError):
    """Invalid user input: bad graph, bad weighting, or out-of-range parameters."""


class ParseError(InputError):
    """Malformed graph or weighting file.

    Carries the 1-based line number when the offending line is known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
