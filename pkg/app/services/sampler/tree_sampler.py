"""
Spanning-tree sampler: down-up walk on complements of spanning trees

The walk state is the non-tree edge set E - T (a basis of the cographic
matroid, weighted by prod 1/w_e). One step:
1. add a uniformly random non-tree edge e = (u, v) to the tree;
2. on the cycle it closes (e plus the tree path u -> v), pick f with
   probability proportional to 1/w_f and remove it (f = e leaves the tree as is).
The tree lives in a DynamicForest, so each step costs amortized O(log n).
Chains draw their randomness in batches and hand each batch to the forest's
compiled exchange loop.
"""
import logging
from dataclasses import dataclass
from typing import Iterator, Tuple

import numpy as np

from app.config.settings import settings
from app.core.exceptions import SamplerStateError
from app.models.graph import Edge, TreeEdgeSet, WeightedGraph
from app.models.walk import Subset, WalkConfig, WalkKind
from app.services.linkcut.dynamic_forest import DynamicForest
from app.services.walk.down_up_walk import mixing_steps

logger = logging.getLogger(__name__)

IN_TREE = -1
DRAW_BATCH = 65_536


@dataclass
class TreeSamplerState:
    """
    Current spanning tree plus the indexed non-tree edge array

    position[e] is e's index in non_tree, or IN_TREE. Both are int64 arrays
    updated in place by the forest's exchange loop.
    """
    forest: DynamicForest
    non_tree: np.ndarray
    position: np.ndarray

    def tree_edges(self) -> TreeEdgeSet:
        return frozenset(self.forest.edges)

    def complement(self) -> Subset:
        return tuple(sorted(self.non_tree.tolist()))


def init_state(graph: WeightedGraph) -> TreeSamplerState:
    """Depth-first-search spanning tree from vertex 0; everything else is non-tree"""
    visited = [False] * graph.vertex_count
    parent_edge = [IN_TREE] * graph.vertex_count
    tree_edges = []
    stack = [0]
    while stack:
        vertex = stack.pop()
        if visited[vertex]:
            continue
        visited[vertex] = True
        if parent_edge[vertex] != IN_TREE:
            tree_edges.append(parent_edge[vertex])
        for neighbour, edge_id in reversed(graph.adjacency[vertex]):
            if not visited[neighbour]:
                parent_edge[neighbour] = edge_id
                stack.append(neighbour)

    forest = DynamicForest(graph.vertex_count, edge_capacity=graph.edge_count)
    for edge_id in tree_edges:
        edge = graph.edges[edge_id]
        forest.link(edge.u, edge.v, edge_id, edge.weight)

    in_tree = np.zeros(graph.edge_count, dtype=bool)
    in_tree[tree_edges] = True
    non_tree = np.flatnonzero(~in_tree).astype(np.int64)
    position = np.full(graph.edge_count, IN_TREE, dtype=np.int64)
    position[non_tree] = np.arange(len(non_tree), dtype=np.int64)
    return TreeSamplerState(forest=forest, non_tree=non_tree, position=position)


def cographic_step(state: TreeSamplerState, graph: WeightedGraph, rng: np.random.Generator) -> bool:
    """
    One down-up step on the tree complement; returns False on a self-move

    Requires at least one non-tree edge.
    """
    index = int(rng.integers(len(state.non_tree)))
    return _apply_cographic_step(state, graph, index, float(rng.random()))


def _apply_cographic_step(state: TreeSamplerState, graph: WeightedGraph, index: int, r: float) -> bool:
    moves = state.forest.exchange_cycle_edges(
        state.non_tree,
        state.position,
        graph.edge_arrays,
        np.array([index], dtype=np.int64),
        np.array([r], dtype=np.float64),
    )
    return moves == 1


def graphic_step(state: TreeSamplerState, graph: WeightedGraph, rng: np.random.Generator) -> bool:
    """
    One down-up step directly on spanning trees; returns False on a self-move

    Drops a uniform tree edge f, then re-adds an edge reconnecting the two
    components with probability proportional to its weight (f included).
    Scans every non-tree edge, so O(|E| log |V|) per step.
    """
    tree = sorted(state.forest.edges)
    if not tree:
        return False
    dropped = tree[int(rng.integers(len(tree)))]
    state.forest.cut(dropped)

    candidates = [dropped]
    for edge_id in state.non_tree.tolist():
        edge = graph.edges[edge_id]
        if not state.forest.connected(edge.u, edge.v):
            candidates.append(edge_id)
    weights = np.array([graph.edges[e].weight for e in candidates])
    cumulative = np.cumsum(weights)
    choice = int(np.searchsorted(cumulative, rng.random() * cumulative[-1], side="right"))
    added = candidates[min(choice, len(candidates) - 1)]

    edge = graph.edges[added]
    state.forest.link(edge.u, edge.v, added, edge.weight)
    if added == dropped:
        return False

    index = int(state.position[added])
    state.non_tree[index] = dropped
    state.position[dropped] = index
    state.position[added] = IN_TREE
    return True


def check_state(state: TreeSamplerState, graph: WeightedGraph) -> None:
    """
    Raises:
        SamplerStateError: forest is not a spanning tree or the edge partition is broken
    """
    tree = set(state.forest.edges)
    non_tree = state.non_tree.tolist()
    if len(tree) != graph.vertex_count - 1:
        raise SamplerStateError(f"forest has {len(tree)} edges, expected {graph.vertex_count - 1}")
    if len(non_tree) != graph.cographic_rank:
        raise SamplerStateError(
            f"{len(non_tree)} non-tree edges, expected {graph.cographic_rank}"
        )
    if tree | set(non_tree) != set(range(graph.edge_count)) or tree & set(non_tree):
        raise SamplerStateError("tree and non-tree edges do not partition the edge set")
    for index, edge_id in enumerate(non_tree):
        if state.position[edge_id] != index:
            raise SamplerStateError(f"position of non-tree edge {edge_id} is stale")
    if any(state.position[e] != IN_TREE for e in tree):
        raise SamplerStateError("tree edge indexed as non-tree")
    for vertex in range(1, graph.vertex_count):
        if not state.forest.connected(0, vertex):
            raise SamplerStateError(f"vertex {vertex} is not spanned by the tree")


def schedule_for(graph: WeightedGraph, config: WalkConfig) -> int:
    """Steps the configured walk runs on this graph (0 when the state is unique)"""
    k = graph.vertex_count - 1 if config.walk == WalkKind.GRAPHIC else graph.cographic_rank
    if k == 0:
        return 0
    if config.steps is not None:
        return config.steps
    return mixing_steps(k, config.epsilon, config.schedule_constant)


def sample_tree(graph: WeightedGraph, config: WalkConfig, rng: np.random.Generator) -> TreeEdgeSet:
    """
    Approximate sample of Pr[T] proportional to prod_{e in T} w_e

    Runs the configured walk from the DFS tree for schedule_for(graph, config)
    steps, then checks the final state.

    Args:
        graph: connected weighted graph
        config: walk kind, epsilon, schedule constant or explicit step count
        rng: the chain's random stream (see chain_rng)

    Returns:
        Edge ids of the sampled spanning tree

    Raises:
        SamplerStateError: the tree / non-tree partition broke during the chain
    """
    state = init_state(graph)
    steps = schedule_for(graph, config)
    logger.debug(f"Sampling tree: walk={config.walk}, steps={steps}")

    if config.walk == WalkKind.GRAPHIC:
        for step in range(1, steps + 1):
            graphic_step(state, graph, rng)
            _maybe_check(state, graph, step)
    else:
        _run_cographic(state, graph, steps, rng)

    check_state(state, graph)
    return state.tree_edges()


def _run_cographic(state: TreeSamplerState, graph: WeightedGraph, steps: int, rng: np.random.Generator) -> None:
    k = len(state.non_tree)
    interval = 1 if settings.DEBUG_CHECKS else settings.CHECK_INTERVAL
    done = 0
    while done < steps:
        batch = min(DRAW_BATCH, steps - done)
        indices = rng.integers(0, k, size=batch, dtype=np.int64)
        draws = rng.random(batch)
        for start, stop in _check_segments(done, batch, interval):
            state.forest.exchange_cycle_edges(
                state.non_tree, state.position, graph.edge_arrays, indices[start:stop], draws[start:stop]
            )
            if interval and (done + stop) % interval == 0:
                check_state(state, graph)
        done += batch


def _check_segments(done: int, batch: int, interval: int) -> Iterator[Tuple[int, int]]:
    """Split a batch at every step number divisible by interval (0: no split)"""
    if not interval:
        yield 0, batch
        return
    start = 0
    while start < batch:
        stop = min(batch, start + interval - (done + start) % interval)
        yield start, stop
        start = stop


def _maybe_check(state: TreeSamplerState, graph: WeightedGraph, step: int) -> None:
    if settings.DEBUG_CHECKS or (settings.CHECK_INTERVAL and step % settings.CHECK_INTERVAL == 0):
        check_state(state, graph)


def chain_rng(seed: int, chain_index: int) -> np.random.Generator:
    """Independent stream for chain `chain_index` under `seed`"""
    return np.random.default_rng(np.random.SeedSequence([seed, chain_index]))


def sample_chain(graph: WeightedGraph, config: WalkConfig, chain_index: int) -> TreeEdgeSet:
    return sample_tree(graph, config, chain_rng(config.seed, chain_index))


def warm_up() -> None:
    """Compile the forest kernels with a short chain on a triangle"""
    triangle = WeightedGraph(vertex_count=3, edges=(Edge(0, 0, 1, 1.0), Edge(1, 1, 2, 1.0), Edge(2, 0, 2, 1.0)))
    sample_tree(triangle, WalkConfig(steps=4), chain_rng(0, 0))
