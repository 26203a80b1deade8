"""
Graph services package
"""
from app.services.graph.generators import GraphFamily, generate_graph
from app.services.graph.graph_parser import parse_graph, serialize_graph
from app.services.graph.spanning_trees import (
    enumerate_spanning_trees,
    is_spanning_tree,
    laplacian,
    spanning_tree_probabilities,
    weighted_tree_total,
)
from app.services.graph.union_find import UnionFind

__all__ = [
    'GraphFamily',
    'generate_graph',
    'parse_graph',
    'serialize_graph',
    'enumerate_spanning_trees',
    'is_spanning_tree',
    'laplacian',
    'spanning_tree_probabilities',
    'weighted_tree_total',
    'UnionFind',
]
