"""Exception hierarchy shared by every module."""


class CubicPMError(Exception):
    """Base class for all library errors."""


# graph construction / validation
class GraphError(CubicPMError, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class NotCubic(GraphError):
    pass


class BadIndex(GraphError):
    pass


class EmptySide(GraphError):
    pass


class Disconnected(GraphError):
    pass


class BadParams(GraphError):
    pass


# enumeration / LP
class SizeLimit(CubicPMError):
    """An enumeration or LP exceeded its configured cap."""

    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap


class CapExceeded(SizeLimit):
    pass


class NotPerfect(CubicPMError, ValueError):
    pass


class Infeasible(CubicPMError):
    pass


# structural preconditions
class NotThreeCut(CubicPMError, ValueError):
    pass


class NotFourCut(CubicPMError, ValueError):
    pass


class BadCutSize(CubicPMError, ValueError):
    pass


class NotPruned(CubicPMError, ValueError):
    pass


class EmptyPreimage(CubicPMError, ValueError):
    pass


class PreconditionFailed(CubicPMError, ValueError):
    pass


class HypothesisFailed(CubicPMError, ValueError):
    """A lemma hypothesis does not hold; ``clause`` names the failing one."""

    def __init__(self, message, clause=None):
        super().__init__(message)
        self.clause = clause


class NotAPath(HypothesisFailed):
    pass


class UsesNewEdge(CubicPMError, ValueError):
    pass


class InductionStuck(CubicPMError):
    """The foliage construction reached a state its proof rules out."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = list(trace or [])


class NoM3(CubicPMError):
    pass
