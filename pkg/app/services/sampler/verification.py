"""
Empirical verification of the sampler against the enumerated tree distribution
"""
import logging
import math
from collections import Counter

from app.models.graph import WeightedGraph
from app.models.reports import VerifyReport
from app.models.walk import WalkConfig
from app.services.graph.spanning_trees import spanning_tree_probabilities
from app.services.sampler.sampler_executor import sample_many

logger = logging.getLogger(__name__)

STANDARD_ERRORS = 3


def verify_sampler(graph: WeightedGraph, config: WalkConfig, samples: int, jobs: int = 1) -> VerifyReport:
    """
    Sample `samples` independent trees and compare with the exact distribution

    Passes iff empirical TV <= epsilon + 3 * stderr, with
    stderr = (1/2) sum_T sqrt(p_T (1 - p_T) / N).

    Raises:
        CapExceededError: graph above the enumeration cap
    """
    exact = spanning_tree_probabilities(graph)
    trees = sample_many(graph, config, samples, jobs)
    counts = Counter(trees)

    empirical_tv = 0.5 * sum(abs(counts.get(tree, 0) / samples - p) for tree, p in exact.items())
    # Anything outside the enumeration is mass the sampler should never produce
    empirical_tv += 0.5 * sum(c for tree, c in counts.items() if tree not in exact) / samples
    stderr = 0.5 * sum(math.sqrt(p * (1 - p) / samples) for p in exact.values())

    passed = empirical_tv <= config.epsilon + STANDARD_ERRORS * stderr
    log = logger.info if passed else logger.warning
    log(
        f"Verification over {len(exact)} trees, {samples} samples: "
        f"TV={empirical_tv:.5f}, stderr={stderr:.5f}, pass={passed}"
    )
    return VerifyReport(
        exact_support=len(exact),
        empirical_tv=empirical_tv,
        epsilon=config.epsilon,
        passed=passed,
    )
