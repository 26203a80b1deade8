"""
Shared fixtures: small graphs and densities with known answers
"""
import itertools
import math
from collections import deque

import numpy as np
import pytest

from app.models.graph import Edge, WeightedGraph
from app.services.densities.dpp import DppDensity
from app.services.densities.table_density import TableDensity, uniform_matroid_density


def make_graph(vertex_count, pairs, weights=None) -> WeightedGraph:
    weights = weights or [1.0] * len(pairs)
    edges = tuple(Edge(i, u, v, float(w)) for i, ((u, v), w) in enumerate(zip(pairs, weights)))
    return WeightedGraph(vertex_count=vertex_count, edges=edges)


def complete_graph(vertex_count: int) -> WeightedGraph:
    return make_graph(vertex_count, list(itertools.combinations(range(vertex_count), 2)))


@pytest.fixture
def triangle() -> WeightedGraph:
    """Edges 0-1 (w=1), 1-2 (w=2), 0-2 (w=3); trees {0,1}: 2, {0,2}: 3, {1,2}: 6"""
    return make_graph(3, [(0, 1), (1, 2), (0, 2)], [1.0, 2.0, 3.0])


@pytest.fixture
def unit_triangle() -> WeightedGraph:
    return make_graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k4() -> WeightedGraph:
    return complete_graph(4)


@pytest.fixture
def k5() -> WeightedGraph:
    return complete_graph(5)


@pytest.fixture
def cycle5() -> WeightedGraph:
    return make_graph(5, [(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture
def path4() -> WeightedGraph:
    return make_graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def double_edge() -> WeightedGraph:
    """Two vertices joined by parallel edges of weight 1 and 4"""
    return make_graph(2, [(0, 1), (0, 1)], [1.0, 4.0])


@pytest.fixture
def u24():
    return uniform_matroid_density(4, 2)


@pytest.fixture
def disjoint_pairs() -> TableDensity:
    """g = z0 z1 + z2 z3: not log-concave, no exchange partner between its two sets"""
    return TableDensity(4, 2, {(0, 1): 1.0, (2, 3): 1.0})


@pytest.fixture
def small_dpp() -> DppDensity:
    return DppDensity([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0], [2.0, -1.0]])


def random_dpp(rng: np.random.Generator, n: int, k: int) -> DppDensity:
    return DppDensity(rng.normal(size=(n, k)))


class NaiveForest:
    """Adjacency lists plus BFS for every query"""

    def __init__(self, vertex_count: int):
        self.vertex_count = vertex_count
        self.edges = {}

    def link(self, u, v, edge_id, weight):
        self.edges[edge_id] = (u, v, weight)

    def cut(self, edge_id):
        del self.edges[edge_id]

    def path(self, u, v):
        """Edge ids from u to v in walking order, or None"""
        neighbours = {x: [] for x in range(self.vertex_count)}
        for edge_id, (a, b, _) in self.edges.items():
            neighbours[a].append((b, edge_id))
            neighbours[b].append((a, edge_id))
        previous = {u: None}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y, edge_id in neighbours[x]:
                if y not in previous:
                    previous[y] = (x, edge_id)
                    queue.append(y)
        if v not in previous:
            return None
        path = []
        while previous[v] is not None:
            v, edge_id = previous[v]
            path.append(edge_id)
        return path[::-1]

    def connected(self, u, v):
        return self.path(u, v) is not None

    def path_sum(self, u, v):
        return sum(1.0 / self.edges[e][2] for e in self.path(u, v))

    def select(self, u, v, r):
        path = self.path(u, v)
        target = r * self.path_sum(u, v)
        prefix = 0.0
        for edge_id in path:
            prefix += 1.0 / self.edges[edge_id][2]
            if target < prefix:
                return edge_id
        return path[-1]


def assert_matches_row(counts, row, trials, standard_errors=4):
    """Empirical one-step frequencies against an exact kernel row"""
    for column, p in enumerate(row):
        observed = counts.get(column, 0) / trials
        if p == 0:
            assert observed == 0
            continue
        stderr = math.sqrt(p * (1 - p) / trials)
        assert abs(observed - p) <= standard_errors * stderr + 1 / trials
