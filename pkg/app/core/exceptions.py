"""
Exception hierarchy shared by every service

All domain failures derive from DownUpError so the CLI can map them to exit code 1.
"""


class DownUpError(Exception):
    """Base class for all domain errors"""


# ============================================================
# Graphs
# ============================================================

class GraphError(DownUpError):
    """Invalid graph input"""


class GraphFormatError(GraphError):
    """Malformed edge-list document (header, line or vertex index)"""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class SelfLoopError(GraphError):
    """Edge with identical endpoints"""


class NonPositiveWeightError(GraphError):
    """Edge weight that is not a positive finite number"""


class DisconnectedGraphError(GraphError):
    """Graph with more than one connected component"""


class GraphGenerationError(GraphError):
    """Benchmark generator found no connected graph after every regeneration attempt"""


class CapExceededError(DownUpError):
    """An exact computation would exceed its configured enumeration cap"""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} of size {size} exceeds the configured cap {cap}")


# ============================================================
# Dynamic forest
# ============================================================

class ForestError(DownUpError):
    """Invalid dynamic forest operation"""


class AlreadyConnectedError(ForestError):
    """Link would close a cycle"""


class DuplicateEdgeError(ForestError):
    """Edge id already present in the forest"""


class MissingEdgeError(ForestError):
    """Edge id not present in the forest"""


class NotConnectedError(ForestError):
    """Path query between vertices in different trees"""


class EmptyPathError(ForestError):
    """Edge selection on the empty path (u == v)"""


# ============================================================
# Densities and walks
# ============================================================

class DensityError(DownUpError):
    """Invalid density or density document"""


class DensityDocumentError(DensityError):
    """Malformed JSON density document"""


class EmptySupportError(DensityError):
    """Density with no positive-mass subset"""


class OracleInconsistencyError(DensityError):
    """Zero extension mass from a state of positive mass"""


class ExchangeError(DownUpError):
    """Invalid exchange check input"""


class OverlappingSetsError(ExchangeError):
    """Quadratic exchange check requires disjoint sets"""


class SamplerStateError(DownUpError):
    """Spanning-tree sampler state lost its tree / non-tree partition"""
