"""
Connected benchmark graphs generated with networkx
"""
import logging
import math
from enum import Enum

import networkx as nx

from app.core.exceptions import GraphGenerationError
from app.models.graph import Edge, WeightedGraph

logger = logging.getLogger(__name__)

REGULAR_DEGREE = 4
MAX_REGENERATION_ATTEMPTS = 100


class GraphFamily(str, Enum):
    """Benchmark graph families"""
    RANDOM_REGULAR = "random-regular"
    GRID = "grid"


def generate_graph(family: GraphFamily, n_edges: int, seed: int = 0) -> WeightedGraph:
    """
    Generate a connected unit-weight graph with roughly n_edges edges

    Deterministic in (family, n_edges, seed).
    """
    family = GraphFamily(family)
    if family == GraphFamily.RANDOM_REGULAR:
        nx_graph = _random_regular(n_edges, seed)
    else:
        side = max(2, math.ceil(math.sqrt(n_edges / 2)))
        nx_graph = nx.convert_node_labels_to_integers(
            nx.grid_2d_graph(side, side), ordering="sorted"
        )

    edges = tuple(
        Edge(edge_id, u, v, 1.0)
        for edge_id, (u, v) in enumerate(sorted(tuple(sorted(e)) for e in nx_graph.edges()))
    )
    graph = WeightedGraph(vertex_count=nx_graph.number_of_nodes(), edges=edges)
    logger.info(
        f"Generated {family.value} graph: {graph.vertex_count} vertices, {graph.edge_count} edges"
    )
    return graph


def _random_regular(n_edges: int, seed: int) -> nx.Graph:
    # |E| = degree * |V| / 2
    vertex_count = max(REGULAR_DEGREE + 1, round(2 * n_edges / REGULAR_DEGREE))
    for attempt in range(MAX_REGENERATION_ATTEMPTS):
        candidate = nx.random_regular_graph(REGULAR_DEGREE, vertex_count, seed=seed + attempt)
        if nx.is_connected(candidate):
            return candidate
        logger.debug(f"Random regular graph (attempt {attempt}) disconnected, regenerating")
    raise GraphGenerationError(
        f"no connected {REGULAR_DEGREE}-regular graph on {vertex_count} vertices "
        f"after {MAX_REGENERATION_ATTEMPTS} attempts"
    )
