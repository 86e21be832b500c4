"""Exception hierarchy shared by every module of the package."""


class TriangulationError(ValueError):
    """Base class for all errors raised by this package."""


class MalformedInputError(TriangulationError):
    """A triangle references an out-of-range vertex or repeats a vertex."""


class InvalidTriangulationError(TriangulationError):
    """An operation that needs a valid surface received an invalid complex."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class NoSuchEdgeError(TriangulationError):
    pass


class LinkingEdgeError(TriangulationError):
    """Interior edge with both endpoints on the boundary."""


class CycleError(TriangulationError):
    pass


class NonSimpleCycleError(CycleError):
    pass


class CycleTouchesBoundaryError(CycleError):
    pass


class NotVertexDisjointError(CycleError):
    pass


class NotIrreducibleError(TriangulationError):
    pass


class OutOfHypothesisError(TriangulationError):
    pass


class TooLargeError(TriangulationError):
    pass


class InvalidParamsError(TriangulationError):
    pass


class UnknownNameError(TriangulationError):
    pass


class ParseError(TriangulationError):
    """Syntax or range error in a tri file; ``line`` is 1-based."""

    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line
