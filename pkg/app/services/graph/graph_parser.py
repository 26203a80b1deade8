"""
Edge-list document parsing and serialization

Format:
    <vertex_count> <edge_count>
    u v [w]        (one edge per line, 0-based vertices, weight defaults to 1.0)
Lines starting with '#' are comments; blank lines are skipped.
"""
import logging
from typing import List

from app.core.exceptions import GraphFormatError
from app.models.graph import Edge, WeightedGraph

logger = logging.getLogger(__name__)

DEFAULT_WEIGHT = 1.0


def parse_graph(text: str) -> WeightedGraph:
    """
    Parse an edge-list document into a validated graph

    Raises:
        GraphFormatError: malformed header or edge line
        SelfLoopError, NonPositiveWeightError, DisconnectedGraphError: invalid graph
    """
    header = None
    edges: List[Edge] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()

        if header is None:
            if len(tokens) != 2:
                raise GraphFormatError("header must be '<vertex_count> <edge_count>'", line_number)
            header = (_parse_int(tokens[0], line_number), _parse_int(tokens[1], line_number))
            continue

        if len(tokens) not in (2, 3):
            raise GraphFormatError(f"expected 'u v [w]', got {line!r}", line_number)
        u = _parse_int(tokens[0], line_number)
        v = _parse_int(tokens[1], line_number)
        weight = DEFAULT_WEIGHT
        if len(tokens) == 3:
            try:
                weight = float(tokens[2])
            except ValueError:
                raise GraphFormatError(f"weight {tokens[2]!r} is not a number", line_number)
        if u < 0 or v < 0:
            raise GraphFormatError("vertex indices must be non-negative", line_number)
        edges.append(Edge(len(edges), u, v, weight))

    if header is None:
        raise GraphFormatError("empty document: missing header line")

    vertex_count, edge_count = header
    if edge_count != len(edges):
        raise GraphFormatError(f"header declares {edge_count} edges but {len(edges)} were found")

    graph = WeightedGraph(vertex_count=vertex_count, edges=tuple(edges))
    logger.debug(f"Parsed graph: {graph.vertex_count} vertices, {graph.edge_count} edges")
    return graph


def serialize_graph(graph: WeightedGraph) -> str:
    """Write a graph back to the edge-list format; weights keep full precision"""
    lines = [f"{graph.vertex_count} {graph.edge_count}"]
    lines.extend(f"{e.u} {e.v} {e.weight!r}" for e in graph.edges)
    return "\n".join(lines) + "\n"


def _parse_int(token: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"{token!r} is not an integer", line_number)
