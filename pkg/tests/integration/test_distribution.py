"""
Statistical end-to-end checks: sampled trees against the enumerated distribution
"""
import math
import time
from collections import Counter

import numpy as np
import pytest

from app.models.graph import WeightedGraph
from app.models.walk import WalkConfig
from app.services.densities import complement_inverse_density
from app.services.graph import GraphFamily, generate_graph, spanning_tree_probabilities
from app.services.sampler import chain_rng, sample_many, sample_tree, schedule_for, verify_sampler, warm_up
from app.services.walk import tau_survival

pytestmark = pytest.mark.integration


def empirical_tv(graph, trees):
    exact = spanning_tree_probabilities(graph)
    counts = Counter(trees)
    assert set(counts) <= set(exact)
    return 0.5 * sum(abs(counts.get(tree, 0) / len(trees) - p) for tree, p in exact.items())


def test_k4_verification_passes(k4):
    report = verify_sampler(k4, WalkConfig(epsilon=0.05, seed=1), samples=5_000)
    assert report.exact_support == 16
    assert report.passed


def test_weighted_triangle_matches_tree_weights(triangle):
    trees = sample_many(triangle, WalkConfig(epsilon=0.01, seed=2), 10_000)
    assert empirical_tv(triangle, trees) <= 0.02


def test_weighted_k4_verification(k4):
    weights = [1.0, 2.0, 0.5, 3.0, 1.5, 4.0]
    weighted = WeightedGraph(
        vertex_count=4,
        edges=tuple(edge._replace(weight=w) for edge, w in zip(k4.edges, weights)),
    )
    report = verify_sampler(weighted, WalkConfig(epsilon=0.05, seed=5), samples=5_000)
    assert report.passed


def test_graphic_walk_verification(k4):
    report = verify_sampler(k4, WalkConfig(epsilon=0.05, seed=6, walk="graphic"), samples=2_000)
    assert report.passed


@pytest.mark.slow
def test_k4_full_size(k4):
    trees = sample_many(k4, WalkConfig(epsilon=0.05, seed=0), 200_000, jobs=4)
    assert empirical_tv(k4, trees) <= 0.06


@pytest.mark.slow
def test_weighted_triangle_full_size(triangle):
    trees = sample_many(triangle, WalkConfig(epsilon=0.01, seed=0), 100_000)
    assert empirical_tv(triangle, trees) <= 0.02


@pytest.mark.slow
@pytest.mark.parametrize("t", [6, 12, 24])
def test_tau_bound_full_size(k5, t):
    density = complement_inverse_density(k5)
    trials = 10_000
    survival = tau_survival(density, density.support()[0], t, trials, np.random.default_rng(t))
    stderr = math.sqrt(max(survival * (1 - survival), 1e-4) / trials)
    assert survival <= density.k * math.exp(-t / density.k) + 3 * stderr


@pytest.mark.slow
def test_wall_time_scales_near_linearly():
    config = WalkConfig(epsilon=0.01, seed=0)
    timings = []
    warm_up()
    for n_edges in (50_000, 100_000, 200_000):
        graph = generate_graph(GraphFamily.RANDOM_REGULAR, n_edges, seed=0)
        assert schedule_for(graph, config) > 0
        rng = chain_rng(config.seed, 0)
        started = time.perf_counter()
        sample_tree(graph, config, rng)
        timings.append(time.perf_counter() - started)
    assert timings[1] / timings[0] <= 3
    assert timings[2] / timings[1] <= 3
    assert timings[2] < 120
