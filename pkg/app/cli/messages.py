"""
Help and status texts of the command-line interface
"""

DESCRIPTION = """Down-up walk spanning-tree sampler.

Draws approximately weighted-uniform spanning trees (Pr[T] proportional to
the product of edge weights) and checks small instances exactly."""

EPILOG = """Exit codes: 0 success, 1 validation or domain failure, 2 usage error.
Graph files: first line '<vertices> <edges>', then 'u v [weight]' per edge (0-based)."""

SAMPLE_HELP = "Sample spanning trees, one per line"
VERIFY_HELP = "Compare empirical tree frequencies with the enumerated distribution"
ANALYZE_HELP = "Exact checks on small densities (exchange, walk-exact, hessian)"
BENCH_HELP = "Time the sampler on generated graphs"

GRAPH_HELP = "Edge-list graph file"
DENSITY_HELP = 'JSON table density: {"n": N, "k": K, "entries": [[[i, ...], w], ...]}'
DPP_HELP = 'JSON DPP: {"k": K, "vectors": [[...], ...]}'
COMPLEMENT_HELP = "With --graph: analyze complements of spanning trees with inverse weights"

EPSILON_HELP = "Target total-variation distance (default: 0.01)"
CONSTANT_HELP = (
    "Schedule constant C in C*k*(ln max(k,2) + ln(1/eps)) (default: 4.0). "
    "The mixing guarantee fixes the order of growth only, not this constant."
)
STEPS_HELP = "Run exactly this many steps instead of the schedule (0 returns the start tree)"
SEED_HELP = "Random seed (default: 0)"
COUNT_HELP = "Number of independent chains (default: 1)"
SAMPLES_HELP = "Number of independent chains to compare (default: 10000)"
JOBS_HELP = "Worker processes (default: 1)"
FORMAT_HELP = "Tree output: sorted edge ids (ids) or 'u-v' pairs (endpoints)"
WALK_HELP = "cographic: O(log n) steps on tree complements; graphic: O(|E|) steps on trees"
SIZES_HELP = "Comma-separated edge counts, e.g. 50000,100000,200000"
FAMILY_HELP = "Generated graph family (default: random-regular)"
TRIALS_HELP = "Random distributions for the KL contraction check (default: 100)"
POINTS_HELP = "Random points for the Hessian check besides z = 1 (default: 20)"
HUMAN_HELP = "Aligned text instead of JSON"
VERBOSE_HELP = "Debug logging on stderr"
