"""
DynamicForest - link-cut trees with inverse-weight path aggregates

Every edge is materialized as its own node between its endpoints, so cutting
by edge id and per-edge weights need no special casing. Vertex nodes carry a
zero value, edge nodes carry 1/w. Preferred paths are kept in splay trees
(with lazy reversal for evert); all operations are amortized O(log n).

Node storage is array based and fixed: index 0 is the nil node, vertices
occupy 1..vertex_count and the vertex_count - 1 edge slots follow. The
compiled kernels in splay_kernels do the restructuring; this class checks
arguments and keeps the edge-id index.
"""
import logging
from typing import Dict, Tuple

import numpy as np

from app.core.exceptions import (
    AlreadyConnectedError,
    DuplicateEdgeError,
    EmptyPathError,
    MissingEdgeError,
    NotConnectedError,
)
from app.services.linkcut import splay_kernels as kernels
from app.services.linkcut.splay_kernels import NIL, TOTAL, VALUE

logger = logging.getLogger(__name__)

INITIAL_EDGE_CAPACITY = 16


class DynamicForest:
    """
    Forest over vertices 0..vertex_count-1 with link / cut / connected and
    path queries over the sum of inverse edge weights.

    Not safe for concurrent use: even queries restructure the splay trees.
    """

    def __init__(self, vertex_count: int, edge_capacity: int = INITIAL_EDGE_CAPACITY):
        if vertex_count < 1:
            raise ValueError(f"vertex_count must be positive, got {vertex_count}")
        self.vertex_count = vertex_count
        self._links, self._flip, self._sums, self._stack = kernels.empty_node_arrays(2 * vertex_count)
        self._node_edge = np.full(2 * vertex_count, -1, dtype=np.int64)
        self._free_nodes = list(range(2 * vertex_count - 1, vertex_count, -1))
        self._size = 0

        capacity = max(1, edge_capacity)
        self._edge_node = np.zeros(capacity, dtype=np.int64)
        self._known_u = np.zeros(capacity, dtype=np.int64)
        self._known_v = np.zeros(capacity, dtype=np.int64)
        self._known_weight = np.zeros(capacity, dtype=np.float64)

    # ------------------------------------------------------------------
    # Public API
    # ------------------------------------------------------------------

    @property
    def edges(self) -> Dict[int, Tuple[int, int, float]]:
        """Snapshot of the present edges: edge_id -> (u, v, weight)"""
        present = np.flatnonzero(self._edge_node != NIL).tolist()
        return {
            edge_id: (int(self._known_u[edge_id]), int(self._known_v[edge_id]), float(self._known_weight[edge_id]))
            for edge_id in present
        }

    def has_edge(self, edge_id: int) -> bool:
        return 0 <= edge_id < len(self._edge_node) and self._edge_node[edge_id] != NIL

    def __len__(self) -> int:
        return self._size

    def link(self, u: int, v: int, edge_id: int, weight: float) -> None:
        """
        Add edge (u, v) with the given id and weight

        Raises:
            DuplicateEdgeError: edge_id already present
            AlreadyConnectedError: u and v are already in the same tree
        """
        self._check_vertex(u)
        self._check_vertex(v)
        if edge_id < 0:
            raise ValueError(f"edge ids must be non-negative, got {edge_id}")
        if self.has_edge(edge_id):
            raise DuplicateEdgeError(f"edge {edge_id} is already in the forest")
        if u == v or self.connected(u, v):
            raise AlreadyConnectedError(f"vertices {u} and {v} are already connected")
        if not weight > 0:
            raise ValueError(f"edge weight must be positive, got {weight}")

        self._ensure_edge_capacity(edge_id + 1)
        node = self._free_nodes.pop()
        self._sums[VALUE, node] = self._sums[TOTAL, node] = 1.0 / weight
        self._node_edge[node] = edge_id
        self._edge_node[edge_id] = node
        self._known_u[edge_id] = u
        self._known_v[edge_id] = v
        self._known_weight[edge_id] = weight
        self._size += 1

        kernels.link_nodes(self._links, self._flip, self._sums, self._stack, u + 1, node)
        kernels.link_nodes(self._links, self._flip, self._sums, self._stack, node, v + 1)

    def cut(self, edge_id: int) -> None:
        """
        Remove the edge with the given id

        Raises:
            MissingEdgeError: edge_id not present
        """
        if not self.has_edge(edge_id):
            raise MissingEdgeError(f"edge {edge_id} is not in the forest")
        node = int(self._edge_node[edge_id])
        u, v = int(self._known_u[edge_id]), int(self._known_v[edge_id])
        kernels.cut_nodes(self._links, self._flip, self._sums, self._stack, u + 1, node)
        kernels.cut_nodes(self._links, self._flip, self._sums, self._stack, node, v + 1)

        self._edge_node[edge_id] = NIL
        self._node_edge[node] = -1
        self._links[:, node] = NIL
        self._flip[node] = False
        self._sums[:, node] = 0.0
        self._free_nodes.append(node)
        self._size -= 1

    def connected(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return True
        arrays = (self._links, self._flip, self._sums, self._stack)
        return kernels.find_root(*arrays, u + 1) == kernels.find_root(*arrays, v + 1)

    def path_inverse_weight_sum(self, u: int, v: int) -> float:
        """
        Sum of 1/w over the tree path u -> v (0 when u == v)

        Raises:
            NotConnectedError: u and v are in different trees
        """
        if not self.connected(u, v):
            raise NotConnectedError(f"vertices {u} and {v} are not connected")
        if u == v:
            return 0.0
        kernels.expose_path(self._links, self._flip, self._sums, self._stack, u + 1, v + 1)
        return float(self._sums[TOTAL, v + 1])

    def select_path_edge(self, u: int, v: int, r: float) -> int:
        """
        Pick the path edge whose prefix interval contains r

        With S the path sum and prefixes accumulated from u toward v, returns the
        edge e with c_before(e) <= r*S < c_after(e). A draw exactly on a boundary
        selects the next edge.

        Raises:
            NotConnectedError: u and v are in different trees
            EmptyPathError: u == v
        """
        if not self.connected(u, v):
            raise NotConnectedError(f"vertices {u} and {v} are not connected")
        if u == v:
            raise EmptyPathError(f"no edges on the path from {u} to itself")

        root = v + 1
        kernels.expose_path(self._links, self._flip, self._sums, self._stack, u + 1, root)
        target = r * float(self._sums[TOTAL, root])
        chosen = kernels.select_prefix(self._links, self._flip, self._sums, root, target)
        kernels.splay(self._links, self._flip, self._sums, self._stack, chosen)
        return int(self._node_edge[chosen])

    def exchange_cycle_edges(
        self,
        non_tree: np.ndarray,
        position: np.ndarray,
        graph_arrays: Tuple[np.ndarray, np.ndarray, np.ndarray],
        indices: np.ndarray,
        draws: np.ndarray,
    ) -> int:
        """
        Run a batch of cycle exchanges without argument checks

        Step s adds edge a = non_tree[indices[s]], closing the cycle a + path(u_a, v_a),
        and removes the cycle edge whose prefix interval over [a, then the path
        from u_a toward v_a] holds draws[s] times the cycle's inverse-weight sum.
        Removing a itself leaves the forest unchanged.

        Args:
            non_tree: int64 ids of the edges outside the forest, updated in place
            position: int64 index of each edge in non_tree (-1 inside), updated in place
            graph_arrays: (u, v, weight) arrays indexed by edge id for every edge
            indices: int64 positions into non_tree, one per step
            draws: float64 uniforms in [0, 1), one per step

        Returns:
            Number of steps that changed the forest
        """
        graph_u, graph_v, graph_weight = graph_arrays
        self._ensure_edge_capacity(len(graph_u))
        return int(kernels.run_exchanges(
            self._links, self._flip, self._sums, self._stack,
            self._node_edge, self._edge_node, self._known_u, self._known_v, self._known_weight,
            non_tree, position, indices, draws,
            graph_u, graph_v, graph_weight,
        ))

    # ------------------------------------------------------------------
    # Storage
    # ------------------------------------------------------------------

    def _check_vertex(self, vertex: int) -> None:
        if not 0 <= vertex < self.vertex_count:
            raise IndexError(f"vertex {vertex} outside [0, {self.vertex_count})")

    def _ensure_edge_capacity(self, required: int) -> None:
        capacity = len(self._edge_node)
        if required <= capacity:
            return
        grown = max(required, 2 * capacity)
        self._edge_node = _grow(self._edge_node, grown)
        self._known_u = _grow(self._known_u, grown)
        self._known_v = _grow(self._known_v, grown)
        self._known_weight = _grow(self._known_weight, grown)


def _grow(array: np.ndarray, size: int) -> np.ndarray:
    grown = np.zeros(size, dtype=array.dtype)
    grown[:len(array)] = array
    return grown
