"""
Densities defined by a graph: spanning trees (graphic matroid) and their
complements with inverted weights (cographic matroid)
"""
import math
from typing import List, Optional

from app.config.settings import settings
from app.core.base_density import SubsetDensity
from app.models.graph import WeightedGraph
from app.models.walk import Subset
from app.services.graph.spanning_trees import enumerate_spanning_trees, is_spanning_tree


class GraphicBasisDensity(SubsetDensity):
    """mu(S) = prod_{e in S} w_e if S is a spanning tree, else 0"""

    def __init__(self, graph: WeightedGraph):
        super().__init__(graph.edge_count, graph.vertex_count - 1)
        self.graph = graph

    def mass(self, subset: Subset) -> float:
        if not is_spanning_tree(self.graph, subset):
            return 0.0
        return self.graph.tree_weight(subset)

    def support(self, cap: Optional[int] = None) -> List[Subset]:
        cap = settings.SUPPORT_CAP if cap is None else cap
        trees = enumerate_spanning_trees(self.graph)
        return self._checked_support([tuple(sorted(tree)) for tree, _ in trees], cap)


class ComplementInverseDensity(SubsetDensity):
    """mu(S) = prod_{e in S} 1/w_e if E - S is a spanning tree, else 0"""

    def __init__(self, graph: WeightedGraph):
        super().__init__(graph.edge_count, graph.cographic_rank)
        self.graph = graph

    def mass(self, subset: Subset) -> float:
        excluded = set(subset)
        tree = [e for e in range(self.graph.edge_count) if e not in excluded]
        if not is_spanning_tree(self.graph, tree):
            return 0.0
        return math.prod(1.0 / self.graph.edges[e].weight for e in subset)

    def support(self, cap: Optional[int] = None) -> List[Subset]:
        cap = settings.SUPPORT_CAP if cap is None else cap
        all_edges = set(range(self.graph.edge_count))
        trees = enumerate_spanning_trees(self.graph)
        return self._checked_support(
            [tuple(sorted(all_edges - tree)) for tree, _ in trees], cap
        )


def graphic_basis_density(graph: WeightedGraph) -> GraphicBasisDensity:
    return GraphicBasisDensity(graph)


def complement_inverse_density(graph: WeightedGraph) -> ComplementInverseDensity:
    return ComplementInverseDensity(graph)
