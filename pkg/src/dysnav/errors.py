"""Exception types shared across the analysis pipeline."""


class DysnavError(Exception):
    """Base class for every error raised by this package."""


class MalformedTimestamp(DysnavError):
    """A timestamp string does not follow yyyy[/mm[/dd[-hr[:mn[:sc]]]]]."""


class EmptyInput(DysnavError):
    """No usable interaction records were found."""

    def __init__(self, message: str, diagnostics: list | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or []


class InvalidEpsilon(DysnavError):
    """The discretization step is unusable (bad syntax, non-positive, or too coarse)."""


class InvalidOmega(DysnavError):
    """The number of weight slices must be a positive integer."""


class InvalidTau(DysnavError):
    """A clustering threshold must lie in [0, 1]."""


class EdgeNotPresent(DysnavError):
    """The queried edge is not part of the graph."""


class NodeNotPresent(DysnavError):
    """The queried node is not part of the graph."""


class EmptyCluster(DysnavError):
    """Cluster representativeness is undefined for empty clusters."""


class EmptyClustering(DysnavError):
    """Clustering representativeness is undefined for empty clusterings."""


class SingleColumn(DysnavError):
    """Similarity needs at least two consecutive time columns."""


class NotForwardInTime(DysnavError):
    """Similarity paths run from an earlier column to a strictly later one."""


class EmptyGraph(DysnavError):
    """The operation needs a graph with at least one node."""


class RootNotInTree(DysnavError):
    """The requested root is not a node of the spanning forest."""
