"""
Exact spanning-tree oracles: matrix-tree total, brute-force enumeration, membership

These are ground truth for verification; they are not on the sampling path.
"""
import itertools
import logging
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from app.config.settings import settings
from app.core.exceptions import CapExceededError
from app.models.graph import TreeEdgeSet, WeightedGraph
from app.services.graph.union_find import is_acyclic_spanning

logger = logging.getLogger(__name__)

# Above this cofactor size the determinant goes through slogdet
_DIRECT_DETERMINANT_MAX = 10


def laplacian(graph: WeightedGraph) -> np.ndarray:
    """Weighted Laplacian; parallel edges add up"""
    matrix = np.zeros((graph.vertex_count, graph.vertex_count))
    for edge in graph.edges:
        matrix[edge.u, edge.u] += edge.weight
        matrix[edge.v, edge.v] += edge.weight
        matrix[edge.u, edge.v] -= edge.weight
        matrix[edge.v, edge.u] -= edge.weight
    return matrix


def weighted_tree_total(graph: WeightedGraph) -> float:
    """
    Sum over spanning trees T of prod_{e in T} w_e (matrix-tree theorem)

    Computed as the determinant of the Laplacian with row and column 0 removed.
    """
    cofactor = laplacian(graph)[1:, 1:]
    if cofactor.shape[0] == 0:
        return 1.0
    if cofactor.shape[0] <= _DIRECT_DETERMINANT_MAX:
        return float(np.linalg.det(cofactor))
    sign, logdet = np.linalg.slogdet(cofactor)
    return float(sign * np.exp(logdet))


def is_spanning_tree(graph: WeightedGraph, edge_ids: Iterable[int]) -> bool:
    """True iff the edges number |V|-1 and connect every vertex"""
    edge_ids = list(edge_ids)
    if len(edge_ids) != graph.vertex_count - 1 or len(set(edge_ids)) != len(edge_ids):
        return False
    return is_acyclic_spanning(
        graph.vertex_count,
        ((graph.edges[e].u, graph.edges[e].v) for e in edge_ids),
    )


def enumerate_spanning_trees(
    graph: WeightedGraph,
    cap: Optional[int] = None,
) -> List[Tuple[TreeEdgeSet, float]]:
    """
    All spanning trees with their weights, by brute force over (|V|-1)-subsets

    Args:
        graph: Graph to enumerate
        cap: Maximum edge count (defaults to settings.ENUMERATION_CAP)

    Raises:
        CapExceededError: graph has more edges than the cap
    """
    cap = settings.ENUMERATION_CAP if cap is None else cap
    if graph.edge_count > cap:
        raise CapExceededError("spanning-tree enumeration (edges)", graph.edge_count, cap)

    trees = []
    for subset in itertools.combinations(range(graph.edge_count), graph.vertex_count - 1):
        if is_spanning_tree(graph, subset):
            trees.append((frozenset(subset), graph.tree_weight(subset)))

    logger.debug(f"Enumerated {len(trees)} spanning trees over {graph.edge_count} edges")
    return trees


def spanning_tree_probabilities(
    graph: WeightedGraph,
    cap: Optional[int] = None,
) -> Dict[TreeEdgeSet, float]:
    """Exact Pr[T] proportional to prod w_e, normalized over the enumeration"""
    trees = enumerate_spanning_trees(graph, cap)
    total = sum(weight for _, weight in trees)
    return {tree: weight / total for tree, weight in trees}
