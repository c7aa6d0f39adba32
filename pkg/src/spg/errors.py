"""Exception hierarchy shared by all solver modules."""


class SpgError(Exception):
    """Base class for all domain errors raised by this package."""


class MalformedInput(SpgError):
    pass


class SchemaError(MalformedInput):
    """A graph document violates the JSON schema; message names the field."""


class NegativeCost(MalformedInput):
    pass


class ZeroCost(MalformedInput):
    """Raised only in strict mode, which enforces strictly positive costs."""


class SelfLoop(MalformedInput):
    pass


class ParallelEdge(MalformedInput):
    pass


class NoPathToSink(SpgError):
    pass


class CycleDetected(SpgError):
    pass


class NotUndirected(SpgError):
    pass


class NotADag(SpgError):
    pass


class NotCactus(SpgError):
    pass


class NotDirectedCactus(SpgError):
    pass


class NotBipartite(SpgError):
    pass


class BadQuantifierPattern(SpgError):
    pass


class TerminalState(SpgError):
    pass


class IllegalMove(SpgError):
    def __init__(self, message: str, rule: str | None = None):
        super().__init__(message)
        self.rule = rule


class TooManyVertices(SpgError):
    pass


class TooLarge(SpgError):
    pass


class ZeroShortestPath(SpgError):
    pass
