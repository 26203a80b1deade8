"""
Union-find (disjoint sets) with path halving and union by size
"""
from typing import Iterable, List


class UnionFind:
    """Disjoint sets over 0..size-1; used for spanning-tree membership checks"""

    def __init__(self, size: int):
        if size < 0:
            raise ValueError("Number of elements must be non-negative")
        self.parents: List[int] = list(range(size))
        self.sizes: List[int] = [1] * size
        self.num_sets = size

    def find(self, element: int) -> int:
        parents = self.parents
        while parents[element] != element:
            parents[element] = parents[parents[element]]
            element = parents[element]
        return element

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of a and b; False if they were already merged"""
        root_a = self.find(a)
        root_b = self.find(b)
        if root_a == root_b:
            return False
        if self.sizes[root_a] < self.sizes[root_b]:
            root_a, root_b = root_b, root_a
        self.parents[root_b] = root_a
        self.sizes[root_a] += self.sizes[root_b]
        self.num_sets -= 1
        return True


def is_acyclic_spanning(vertex_count: int, endpoints: Iterable[tuple]) -> bool:
    """True iff the (u, v) pairs connect all vertices without closing a cycle"""
    sets = UnionFind(vertex_count)
    for u, v in endpoints:
        if not sets.union(u, v):
            return False
    return sets.num_sets == 1
