"""
Graph data models
"""
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, List, NamedTuple, Tuple

import numpy as np

from app.core.exceptions import (
    DisconnectedGraphError,
    GraphFormatError,
    NonPositiveWeightError,
    SelfLoopError,
)

# Set of edge ids forming a spanning tree of the associated graph
TreeEdgeSet = FrozenSet[int]


class Edge(NamedTuple):
    """Undirected weighted edge; edge_id is its position in the edge list"""
    edge_id: int
    u: int
    v: int
    weight: float


@dataclass(frozen=True)
class WeightedGraph:
    """
    Connected multigraph with positive edge weights

    Immutable after construction. Self-loops are rejected, parallel edges
    are kept and told apart by edge id.
    """
    vertex_count: int
    edges: Tuple[Edge, ...]
    adjacency: Tuple[Tuple[Tuple[int, int], ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if self.vertex_count < 1:
            raise GraphFormatError(f"vertex count must be positive, got {self.vertex_count}")

        edges = tuple(Edge(*edge) for edge in self.edges)
        neighbours: List[List[Tuple[int, int]]] = [[] for _ in range(self.vertex_count)]

        for position, edge in enumerate(edges):
            if edge.edge_id != position:
                raise GraphFormatError(
                    f"edge id {edge.edge_id} does not match its position {position}"
                )
            for endpoint in (edge.u, edge.v):
                if not 0 <= endpoint < self.vertex_count:
                    raise GraphFormatError(
                        f"edge {edge.edge_id}: vertex {endpoint} outside [0, {self.vertex_count})"
                    )
            if edge.u == edge.v:
                raise SelfLoopError(f"edge {edge.edge_id} is a self-loop at vertex {edge.u}")
            if not (math.isfinite(edge.weight) and edge.weight > 0):
                raise NonPositiveWeightError(
                    f"edge {edge.edge_id} has weight {edge.weight}; weights must be positive and finite"
                )
            neighbours[edge.u].append((edge.v, edge.edge_id))
            neighbours[edge.v].append((edge.u, edge.edge_id))

        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", tuple(tuple(n) for n in neighbours))

        components = self._count_components()
        if components != 1:
            raise DisconnectedGraphError(
                f"graph has {components} connected components; a spanning tree needs exactly 1"
            )

    def _count_components(self) -> int:
        seen = [False] * self.vertex_count
        components = 0
        for start in range(self.vertex_count):
            if seen[start]:
                continue
            components += 1
            seen[start] = True
            stack = [start]
            while stack:
                vertex = stack.pop()
                for neighbour, _ in self.adjacency[vertex]:
                    if not seen[neighbour]:
                        seen[neighbour] = True
                        stack.append(neighbour)
        return components

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def cographic_rank(self) -> int:
        """k = |E| - |V| + 1, the size of every spanning-tree complement"""
        return self.edge_count - self.vertex_count + 1

    def tree_weight(self, edge_ids) -> float:
        """Product of the weights of the given edges"""
        return math.prod(self.edges[e].weight for e in edge_ids)

    @cached_property
    def edge_arrays(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(u, v, weight) arrays indexed by edge id"""
        u = np.fromiter((e.u for e in self.edges), dtype=np.int64, count=self.edge_count)
        v = np.fromiter((e.v for e in self.edges), dtype=np.int64, count=self.edge_count)
        weight = np.fromiter((e.weight for e in self.edges), dtype=np.float64, count=self.edge_count)
        return u, v, weight
