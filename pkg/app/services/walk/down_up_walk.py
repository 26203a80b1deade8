"""
Generic down-up random walk over any SubsetDensity

One step from S: drop a uniform element i, giving T = S - i, then add j not in T
with probability proportional to mu(T + j) (j = i, i.e. staying put, is allowed).
Each step queries mu on the n - k + 1 supersets of T.
"""
import logging
import math
from typing import Optional, Tuple

import numpy as np

from app.core.base_density import SubsetDensity, canonical_subset
from app.core.exceptions import DensityError, OracleInconsistencyError
from app.models.walk import Subset, WalkRun

logger = logging.getLogger(__name__)


def mixing_steps(k: int, epsilon: float, constant: float) -> int:
    """
    Step schedule max(1, ceil(C * k * (ln max(k, 2) + ln(1/epsilon))))

    ln max(k, 2) keeps k = 1 from dropping the log k term entirely.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    if not constant > 0:
        raise ValueError(f"schedule constant must be positive, got {constant}")
    return max(1, math.ceil(constant * k * (math.log(max(k, 2)) + math.log(1 / epsilon))))


def down_up_step(density: SubsetDensity, subset, rng: np.random.Generator) -> Subset:
    """
    One down-up move from a set of positive mass

    Raises:
        OracleInconsistencyError: all extensions of the dropped set have zero mass
    """
    new_subset, _, _ = _down_up_move(density, canonical_subset(subset), rng)
    return new_subset


def run_chain(
    density: SubsetDensity,
    start,
    steps: int,
    rng: np.random.Generator,
) -> WalkRun:
    """
    Run `steps` down-up moves from `start`, recording tau

    Every element brought in by an up move is marked, including an element
    that replaced itself; tau is the first step after which no unmarked
    initial element remains.
    """
    current = canonical_subset(start)
    _require_positive(density, current)
    if steps < 0:
        raise ValueError(f"steps must be non-negative, got {steps}")

    unmarked = set(current)
    tau: Optional[int] = 0 if not unmarked else None
    if density.k == 0:
        return WalkRun(final_set=current, steps=0, tau=tau)

    for step in range(1, steps + 1):
        current, dropped, _ = _down_up_move(density, current, rng)
        unmarked.discard(dropped)
        if tau is None and not unmarked:
            tau = step

    logger.debug(f"Chain finished: k={density.k}, steps={steps}, tau={tau}")
    return WalkRun(final_set=current, steps=steps, tau=tau)


def tau_survival(
    density: SubsetDensity,
    start,
    t: int,
    trials: int,
    rng: np.random.Generator,
) -> float:
    """Fraction of independent chains of length t whose tau exceeds t"""
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    survived = 0
    for _ in range(trials):
        run = run_chain(density, start, t, rng)
        if run.tau is None:
            survived += 1
    logger.info(f"tau survival: k={density.k}, t={t}, {survived}/{trials} chains with tau > t")
    return survived / trials


def _down_up_move(
    density: SubsetDensity,
    current: Subset,
    rng: np.random.Generator,
) -> Tuple[Subset, int, int]:
    """Returns (next set, dropped element, added element)"""
    drop_index = int(rng.integers(len(current)))
    dropped = current[drop_index]
    rest = current[:drop_index] + current[drop_index + 1:]
    rest_members = set(rest)

    candidates = [j for j in range(density.n) if j not in rest_members]
    extensions = [canonical_subset(rest + (j,)) for j in candidates]
    masses = np.array([density.mass(s) for s in extensions], dtype=float)
    total = float(masses.sum())
    if not total > 0:
        raise OracleInconsistencyError(
            f"every extension of {list(rest)} has zero mass although {list(current)} has positive mass"
        )

    cumulative = np.cumsum(masses)
    index = int(np.searchsorted(cumulative, rng.random() * total, side="right"))
    index = min(index, len(candidates) - 1)
    while masses[index] <= 0:
        # Only reachable when rounding pushes the draw past the last positive mass
        index -= 1
    return extensions[index], dropped, candidates[index]


def _require_positive(density: SubsetDensity, subset: Subset) -> None:
    if not density.eval(subset) > 0:
        raise DensityError(f"start set {list(subset)} is outside the support")
