"""
Repository for edge-list graph documents
"""
import logging

from app.core.base_repository import BaseRepository, PathLike
from app.core.exceptions import GraphFormatError
from app.models.graph import WeightedGraph
from app.services.graph.graph_parser import parse_graph, serialize_graph

logger = logging.getLogger(__name__)


class GraphRepository(BaseRepository):
    """Loads and stores graphs in the edge-list format"""

    error_class = GraphFormatError

    def load(self, path: PathLike) -> WeightedGraph:
        """
        Load a validated graph

        Raises:
            GraphFormatError: unreadable file or malformed document
            GraphError: the document describes an invalid graph
        """
        graph = parse_graph(self.read_text(path))
        logger.info(
            f"Loaded graph {path}: {graph.vertex_count} vertices, {graph.edge_count} edges"
        )
        return graph

    def save(self, graph: WeightedGraph, path: PathLike) -> None:
        try:
            with open(path, "w", encoding=self.encoding) as handle:
                handle.write(serialize_graph(graph))
        except OSError as e:
            raise GraphFormatError(f"cannot write {path}: {e}") from e
