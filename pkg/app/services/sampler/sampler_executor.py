"""
SamplerExecutor - runs independent sampling chains, optionally in parallel

Chain i is seeded from (config.seed, i), so results do not depend on how the
chains are spread over workers; outputs come back in chain-index order.
"""
import asyncio
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import List

from app.models.graph import TreeEdgeSet, WeightedGraph
from app.models.walk import WalkConfig
from app.services.sampler.tree_sampler import sample_chain

logger = logging.getLogger(__name__)

# Chunks per worker; more chunks smooth out uneven chain costs
CHUNKS_PER_JOB = 4


def sample_chain_range(graph: WeightedGraph, config: WalkConfig, start: int, stop: int) -> List[TreeEdgeSet]:
    return [sample_chain(graph, config, index) for index in range(start, stop)]


class SamplerExecutor:
    """
    Fans chains out over a process pool

    Features:
    - Chunked submission (the graph is pickled once per chunk)
    - Results gathered in submission order
    - A failing chunk fails the whole batch
    """

    def __init__(self, jobs: int = 1):
        if jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {jobs}")
        self.jobs = jobs

    async def run(self, graph: WeightedGraph, config: WalkConfig, count: int) -> List[TreeEdgeSet]:
        chunk = max(1, math.ceil(count / (self.jobs * CHUNKS_PER_JOB)))
        bounds = [(start, min(start + chunk, count)) for start in range(0, count, chunk)]
        logger.info(f"Running {count} chains in {len(bounds)} chunks on {self.jobs} workers")

        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=self.jobs) as pool:
            tasks = [
                loop.run_in_executor(pool, sample_chain_range, graph, config, start, stop)
                for start, stop in bounds
            ]
            results = await asyncio.gather(*tasks, return_exceptions=True)

        trees: List[TreeEdgeSet] = []
        for (start, stop), result in zip(bounds, results):
            if isinstance(result, Exception):
                logger.error(f"Chains {start}..{stop - 1} failed: {result}")
                raise result
            trees.extend(result)
        return trees


def sample_many(graph: WeightedGraph, config: WalkConfig, count: int, jobs: int = 1) -> List[TreeEdgeSet]:
    """
    `count` independent samples; chain i uses the stream of (config.seed, i)

    Args:
        graph: Graph to sample spanning trees of
        config: Walk configuration
        count: Number of chains (>= 1)
        jobs: Worker processes; 1 runs in-process
    """
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    if jobs <= 1 or count == 1:
        return sample_chain_range(graph, config, 0, count)
    return asyncio.run(SamplerExecutor(jobs).run(graph, config, count))
