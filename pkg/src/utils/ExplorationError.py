from utils.ErrorKind import ErrorKind


class ExplorationError(ValueError):
    """
    The single error type raised by the library. The kind tells which precondition or invariant was violated,
    the message tells the user what to fix.
    """

    def __init__(self, kind: ErrorKind, message: str):
        super().__init__(message)
        self.kind = kind
        self.message = message

    def __str__(self) -> str:
        return "[" + self.kind.value + "] " + self.message
