"""
Approximate-exchange constants and structural log-concavity checks

alpha-exchange: for all S, T in the support and i in S there is j in T with
    mu(S) mu(T) <= alpha * mu(S - i + j) mu(T + i - j).
exchange_alpha computes the smallest such alpha exactly, by enumeration.
"""
import logging
import math
from typing import Dict, Optional

import numpy as np

from app.config.settings import settings
from app.core.base_density import SubsetDensity, canonical_subset
from app.core.exceptions import CapExceededError, OverlappingSetsError
from app.models.reports import (
    DppBoundResult,
    ExchangeReport,
    ExchangeViolation,
    ExchangeWitness,
    HessianReport,
    QuadraticCheckResult,
)
from app.models.walk import Subset
from app.services.densities.dpp import DppDensity
from app.services.densities.polynomial import hessian_at, positive_eigenvalue_count

logger = logging.getLogger(__name__)

RELATIVE_TOLERANCE = 1e-9
QUADRATIC_TOLERANCE = 1e-12
MAX_REPORTED_VIOLATIONS = 1000


def exchange_alpha(density: SubsetDensity) -> ExchangeReport:
    """
    Exact alpha_min = max over (S, T, i) of min over valid j of
    mu(S) mu(T) / (mu(S - i + j) mu(T + i - j))

    Valid j: j = i when i is in T, otherwise j in T - S. Zero denominators are
    skipped; a triple with no positive denominator is a violation and makes
    alpha_min infinite. Ratios are compared in log space.

    Args:
        density: oracle with support at most settings.SUPPORT_CAP

    Returns:
        ExchangeReport with alpha_min, the first worst (S, T, i, j) as witness,
        the number of ordered pairs scanned and up to MAX_REPORTED_VIOLATIONS
        triples without a partner

    Raises:
        CapExceededError: support above settings.SUPPORT_CAP
        EmptySupportError: density has no positive mass
    """
    support = density.support()
    log_mass: Dict[Subset, float] = {s: math.log(density.mass(s)) for s in support}

    worst = -math.inf
    witness: Optional[ExchangeWitness] = None
    violations = []
    violation_count = 0
    pair_count = 0

    for S in support:
        S_members = set(S)
        for T in support:
            pair_count += 1
            T_members = set(T)
            base = log_mass[S] + log_mass[T]
            for i in S:
                if i in T_members:
                    # j = i leaves both sets unchanged: ratio 1
                    best, best_j = 0.0, i
                else:
                    best, best_j = _best_partner(S, T, i, S_members, log_mass, base)

                if best_j is None:
                    violation_count += 1
                    if len(violations) < MAX_REPORTED_VIOLATIONS:
                        violations.append(ExchangeViolation(S=list(S), T=list(T), i=i))
                    if witness is None or not math.isinf(witness.ratio):
                        witness = ExchangeWitness(S=list(S), T=list(T), i=i, j=None, ratio=math.inf)
                    continue

                if worst == -math.inf or best > worst + RELATIVE_TOLERANCE * max(1.0, abs(worst)):
                    worst = best
                    if witness is None or not math.isinf(witness.ratio):
                        witness = ExchangeWitness(
                            S=list(S), T=list(T), i=i, j=best_j, ratio=math.exp(best)
                        )

    alpha = math.inf if violation_count else math.exp(max(worst, 0.0))
    if violation_count > len(violations):
        logger.warning(
            f"{violation_count} exchange violations, reporting the first {len(violations)}"
        )
    logger.info(f"Exchange alpha for {density!r}: {alpha} over {pair_count} pairs")

    return ExchangeReport(
        alpha_min=alpha,
        k=density.k,
        k_squared=density.k ** 2,
        witness=witness,
        pair_count=pair_count,
        violations=violations,
    )


def _best_partner(S, T, i, S_members, log_mass, base):
    best, best_j = math.inf, None
    without_i = [x for x in S if x != i]
    for j in T:
        if j in S_members:
            continue
        swapped_S = canonical_subset(without_i + [j])
        swapped_T = canonical_subset([x for x in T if x != j] + [i])
        if swapped_S not in log_mass or swapped_T not in log_mass:
            continue
        ratio = base - log_mass[swapped_S] - log_mass[swapped_T]
        if ratio < best:
            best, best_j = ratio, j
    return best, best_j


def quadratic_exchange_check(density: SubsetDensity, S, T) -> QuadraticCheckResult:
    """
    k = 2 check sqrt(A) <= sqrt(B) + sqrt(C) for disjoint S = {s1, s2}, T = {t1, t2}

    A = mu(S) mu(T), B = mu({s1,t1}) mu({s2,t2}), C = mu({s1,t2}) mu({s2,t1}).

    Raises:
        OverlappingSetsError: S and T share an element
    """
    if density.k != 2:
        raise ValueError(f"quadratic exchange check needs k = 2, got k = {density.k}")
    S = canonical_subset(S)
    T = canonical_subset(T)
    if len(S) != 2 or len(T) != 2:
        raise ValueError("S and T must be 2-subsets")
    if set(S) & set(T):
        raise OverlappingSetsError(f"S={list(S)} and T={list(T)} overlap")

    (s1, s2), (t1, t2) = S, T
    mu = density.eval
    A = mu(S) * mu(T)
    B = mu((s1, t1)) * mu((s2, t2))
    C = mu((s1, t2)) * mu((s2, t1))
    passed = math.sqrt(A) <= math.sqrt(B) + math.sqrt(C) + QUADRATIC_TOLERANCE
    return QuadraticCheckResult(passed=passed, A=A, B=B, C=C)


def dpp_exchange_bound_check(density: DppDensity) -> DppBoundResult:
    """A k-DPP has the k^2-exchange property: alpha_min <= k^2"""
    report = exchange_alpha(density)
    k_squared = density.k ** 2
    return DppBoundResult(
        passed=report.alpha_min <= k_squared + RELATIVE_TOLERANCE,
        alpha_min=report.alpha_min,
        k_squared=k_squared,
    )


def logconcavity_necessary_check(
    density: SubsetDensity,
    num_points: int = 20,
    rng: Optional[np.random.Generator] = None,
) -> HessianReport:
    """
    At most one positive Hessian eigenvalue at z = 1 and at num_points random z > 0

    Raises:
        CapExceededError: n above settings.HESSIAN_DIMENSION_CAP, or support too large
    """
    if density.n > settings.HESSIAN_DIMENSION_CAP:
        raise CapExceededError("Hessian dimension", density.n, settings.HESSIAN_DIMENSION_CAP)
    rng = rng if rng is not None else np.random.default_rng(settings.DEFAULT_SEED)

    points = [np.ones(density.n)]
    points.extend(np.exp(rng.normal(size=density.n)) for _ in range(num_points))

    max_positive = 0
    for z in points:
        max_positive = max(max_positive, positive_eigenvalue_count(hessian_at(density, z)))

    report = HessianReport(max_positive_eigs=max_positive, passed=max_positive <= 1, points=len(points))
    if not report.passed:
        logger.warning(f"{density!r} has {max_positive} positive Hessian eigenvalues: not log-concave")
    return report
