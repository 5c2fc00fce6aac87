"""Exception types raised across the package."""


class NSGError(ValueError):
    """Base class for all data errors raised by nsgraph."""


class InvalidSequence(NSGError):
    pass


class DisconnectedResult(NSGError):
    """A degenerate cell sequence expands to a code ending in an isolated vertex."""


class NoNeighbors(NSGError):
    pass


class EmptyGraph(NSGError):
    pass


class Disconnected(NSGError):
    pass


class NoEdges(NSGError):
    pass


class SizeMismatch(NSGError):
    pass


class ParseError(NSGError):
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class SelfLoop(ParseError):
    pass


class EmptyInput(ParseError):
    pass
