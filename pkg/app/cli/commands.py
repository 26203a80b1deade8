"""
Command implementations

Each command takes the parsed argparse namespace and returns a CommandOutcome;
domain errors propagate to the entry point, which maps them to exit codes.
"""
import json
import logging
import time
from argparse import Namespace
from typing import List

import numpy as np

from app.core.base_density import SubsetDensity
from app.models.graph import TreeEdgeSet, WeightedGraph
from app.models.reports import AnalysisKind, BenchRow, CommandOutcome, OutputFormat, Report
from app.models.walk import WalkConfig
from app.repositories.density_repository import DensityRepository
from app.repositories.graph_repository import GraphRepository
from app.services.densities.graphic import complement_inverse_density, graphic_basis_density
from app.services.exchange.exchange_checker import exchange_alpha, logconcavity_necessary_check
from app.services.graph.generators import generate_graph
from app.services.sampler.sampler_executor import sample_many
from app.services.sampler.tree_sampler import chain_rng, sample_tree, schedule_for, warm_up
from app.services.sampler.verification import verify_sampler
from app.services.walk.exact_analysis import analyze_walk_exact

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def build_config(args: Namespace) -> WalkConfig:
    """
    Raises:
        pydantic.ValidationError: epsilon, constant, seed or steps out of range
    """
    return WalkConfig(
        epsilon=args.epsilon,
        schedule_constant=args.constant,
        seed=args.seed,
        steps=getattr(args, "steps", None),
        walk=getattr(args, "walk", "cographic"),
    )


def render(report: Report, human: bool) -> str:
    return report.to_human() if human else report.to_json()


def format_tree(graph: WeightedGraph, tree: TreeEdgeSet, output_format: OutputFormat) -> str:
    edge_ids = sorted(tree)
    if OutputFormat(output_format) == OutputFormat.ENDPOINTS:
        return " ".join(f"{graph.edges[e].u}-{graph.edges[e].v}" for e in edge_ids)
    return json.dumps(edge_ids)


def cmd_sample(args: Namespace) -> CommandOutcome:
    config = build_config(args)
    graph = GraphRepository().load(args.graph)
    logger.info(
        f"Sampling {args.count} trees: k={graph.cographic_rank}, "
        f"steps={schedule_for(graph, config)}, seed={config.seed}"
    )
    trees = sample_many(graph, config, args.count, args.jobs)
    lines = [format_tree(graph, tree, args.format) for tree in trees]
    return CommandOutcome(exit_code=EXIT_OK, payload="\n".join(lines))


def cmd_verify(args: Namespace) -> CommandOutcome:
    config = build_config(args)
    graph = GraphRepository().load(args.graph)
    report = verify_sampler(graph, config, args.samples, args.jobs)
    return CommandOutcome(
        exit_code=EXIT_OK if report.passed else EXIT_FAILED,
        payload=render(report, args.human),
    )


def load_density(args: Namespace) -> SubsetDensity:
    """The density named by exactly one of --graph, --density, --dpp"""
    if args.graph is not None:
        graph = GraphRepository().load(args.graph)
        if args.complement:
            return complement_inverse_density(graph)
        return graphic_basis_density(graph)
    repository = DensityRepository()
    if args.density is not None:
        return repository.load_table(args.density)
    return repository.load_dpp(args.dpp)


def cmd_analyze(args: Namespace) -> CommandOutcome:
    density = load_density(args)
    kind = AnalysisKind(args.analysis)
    logger.info(f"Analyzing {density!r}: {kind.value}")

    if kind == AnalysisKind.EXCHANGE:
        report = exchange_alpha(density)
        # An infinite constant is a finding, not a failure
        return CommandOutcome(exit_code=EXIT_OK, payload=render(report, args.human))

    if kind == AnalysisKind.WALK_EXACT:
        report = analyze_walk_exact(density, trials=args.trials, seed=args.seed)
        passed = report.kl_contraction_pass and report.pinsker_pass
    else:
        report = logconcavity_necessary_check(
            density, num_points=args.points, rng=np.random.default_rng(args.seed)
        )
        passed = report.passed

    return CommandOutcome(
        exit_code=EXIT_OK if passed else EXIT_FAILED,
        payload=render(report, args.human),
    )


def run_bench(args: Namespace) -> List[BenchRow]:
    config = build_config(args)
    rows = []
    warm_up()
    for n_edges in args.sizes:
        graph = generate_graph(args.graph_family, n_edges, args.seed)
        steps = schedule_for(graph, config)
        rng = chain_rng(config.seed, 0)

        started = time.perf_counter()
        sample_tree(graph, config, rng)
        wall = time.perf_counter() - started

        row = BenchRow(
            n_edges=graph.edge_count,
            steps=steps,
            wall_seconds=wall,
            seconds_per_step=wall / steps if steps else 0.0,
        )
        logger.info(f"Bench {row.to_json()}")
        rows.append(row)
    return rows


def cmd_bench(args: Namespace) -> CommandOutcome:
    rows = run_bench(args)
    if args.human:
        header = f"{'n_edges':>10}  {'steps':>12}  {'wall_seconds':>12}  {'seconds_per_step':>16}"
        lines = [
            f"{r.n_edges:>10}  {r.steps:>12}  {r.wall_seconds:>12.3f}  {r.seconds_per_step:>16.3e}"
            for r in rows
        ]
        payload = "\n".join([header] + lines)
    else:
        payload = json.dumps([row.model_dump() for row in rows])
    return CommandOutcome(exit_code=EXIT_OK, payload=payload)
