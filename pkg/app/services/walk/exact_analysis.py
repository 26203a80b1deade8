"""
Exact analysis of the down-up walk on small instances

Builds the one-step kernel over the enumerated support and checks it against
the information-theoretic facts the mixing analysis rests on: stationarity,
reversibility, spectral gap >= 1/k, KL contraction by (1 - 1/k) and Pinsker.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from app.config.settings import settings
from app.core.base_density import SubsetDensity, canonical_subset
from app.models.reports import WalkExactReport
from app.models.walk import DistributionTable, Subset

logger = logging.getLogger(__name__)

CHECK_TOLERANCE = 1e-12
MAX_POINT_MASSES = 50


@dataclass
class TransitionKernel:
    """Row-stochastic down-up kernel over an enumerated support"""
    support: List[Subset]
    matrix: np.ndarray
    index: Dict[Subset, int] = field(init=False, repr=False)

    def __post_init__(self):
        self.index = {subset: position for position, subset in enumerate(self.support)}

    def row(self, subset) -> np.ndarray:
        return self.matrix[self.index[canonical_subset(subset)]]


def transition_matrix(density: SubsetDensity, cap: Optional[int] = None) -> TransitionKernel:
    """
    Exact one-step kernel of the down-up walk

    Args:
        density: oracle whose support becomes the state space
        cap: largest support to enumerate, settings.SUPPORT_CAP when None

    Returns:
        TransitionKernel over the sorted support; row S holds P(S, .) and sums to 1

    Raises:
        CapExceededError: support larger than the cap (default settings.SUPPORT_CAP)
    """
    support = density.support(settings.SUPPORT_CAP if cap is None else cap)
    kernel = TransitionKernel(support=support, matrix=np.zeros((len(support), len(support))))
    if density.k == 0:
        kernel.matrix[0, 0] = 1.0
        return kernel

    masses = {subset: density.mass(subset) for subset in support}
    k = density.k
    for row, subset in enumerate(support):
        for drop_index in range(k):
            rest = subset[:drop_index] + subset[drop_index + 1:]
            rest_members = set(rest)
            targets = []
            for j in range(density.n):
                if j in rest_members:
                    continue
                extension = canonical_subset(rest + (j,))
                mass = masses.get(extension, 0.0)
                if mass > 0:
                    targets.append((kernel.index[extension], mass))
            total = sum(mass for _, mass in targets)
            for column, mass in targets:
                kernel.matrix[row, column] += mass / (k * total)

    logger.debug(f"Transition kernel built over {len(support)} states (k={k})")
    return kernel


def stationary_table(density: SubsetDensity, support: Optional[List[Subset]] = None) -> DistributionTable:
    """mu normalized over its support"""
    support = density.support() if support is None else support
    return DistributionTable.from_weights(support, [density.mass(s) for s in support])


def kl_divergence(nu: DistributionTable, mu: DistributionTable) -> float:
    """
    D(nu | mu) = sum nu log(nu / mu); terms with nu = 0 contribute 0

    Returns math.inf when nu charges a state mu does not.
    """
    _require_same_support(nu, mu)
    p = nu.as_array()
    q = mu.as_array()
    charged = p > 0
    if np.any(q[charged] <= 0):
        return math.inf
    return max(0.0, float(np.sum(p[charged] * np.log(p[charged] / q[charged]))))


def tv_distance(nu: DistributionTable, mu: DistributionTable) -> float:
    """(1/2) sum |nu - mu|"""
    _require_same_support(nu, mu)
    return min(1.0, 0.5 * float(np.sum(np.abs(nu.as_array() - mu.as_array()))))


def push_forward(nu: DistributionTable, kernel: TransitionKernel) -> DistributionTable:
    """nu P"""
    if nu.support != kernel.support:
        raise ValueError("distribution and kernel supports differ")
    return DistributionTable.from_weights(kernel.support, nu.as_array() @ kernel.matrix)


def random_distribution(support: List[Subset], rng: np.random.Generator) -> DistributionTable:
    """Normalized independent uniform(0, 1) weights"""
    return DistributionTable.from_weights(support, rng.random(len(support)))


def point_mass(support: List[Subset], subset) -> DistributionTable:
    weights = np.zeros(len(support))
    weights[support.index(canonical_subset(subset))] = 1.0
    return DistributionTable(support=list(support), probabilities=weights.tolist())


def stationarity_error(kernel: TransitionKernel, mu: DistributionTable) -> float:
    """max |mu P - mu|"""
    pi = mu.as_array()
    return float(np.max(np.abs(pi @ kernel.matrix - pi)))


def reversibility_error(kernel: TransitionKernel, mu: DistributionTable) -> float:
    """max |diag(mu) P - (diag(mu) P)^T|"""
    flow = mu.as_array()[:, None] * kernel.matrix
    return float(np.max(np.abs(flow - flow.T)))


def spectral_gap(kernel: TransitionKernel, mu: DistributionTable) -> float:
    """1 - (second largest eigenvalue) of the reversible kernel"""
    if len(kernel.support) == 1:
        return 1.0
    root = np.sqrt(mu.as_array())
    symmetric = root[:, None] * kernel.matrix / root[None, :]
    eigenvalues = np.linalg.eigvalsh((symmetric + symmetric.T) / 2)
    return float(1.0 - eigenvalues[-2])


def exact_mixing_time(
    kernel: TransitionKernel,
    mu: DistributionTable,
    start,
    epsilon: float,
    max_steps: int = 10_000,
) -> Optional[int]:
    """Smallest t with TV(delta_start P^t, mu) <= epsilon, or None beyond max_steps"""
    target = mu.as_array()
    row = np.zeros(len(kernel.support))
    row[kernel.index[canonical_subset(start)]] = 1.0
    for t in range(max_steps + 1):
        if 0.5 * float(np.sum(np.abs(row - target))) <= epsilon:
            return t
        row = row @ kernel.matrix
    return None


def analyze_walk_exact(density: SubsetDensity, trials: int = 100, seed: int = 0) -> WalkExactReport:
    """
    Stationarity, reversibility, spectral gap, KL contraction and Pinsker checks

    KL contraction is tested on `trials` random distributions plus point masses
    on (up to MAX_POINT_MASSES) support states.
    """
    kernel = transition_matrix(density)
    mu = stationary_table(density, kernel.support)
    rng = np.random.default_rng(seed)
    k = density.k

    candidates = [random_distribution(kernel.support, rng) for _ in range(trials)]
    candidates.extend(point_mass(kernel.support, s) for s in kernel.support[:MAX_POINT_MASSES])

    contraction = 1.0 - 1.0 / k if k > 0 else 0.0
    kl_pass = True
    pinsker_pass = True
    for nu in candidates:
        stepped = push_forward(nu, kernel)
        before = kl_divergence(nu, mu)
        after = kl_divergence(stepped, mu)
        if k > 0 and after > contraction * before + CHECK_TOLERANCE:
            kl_pass = False
        for dist, divergence in ((nu, before), (stepped, after)):
            if tv_distance(dist, mu) > math.sqrt(divergence / 2) + CHECK_TOLERANCE:
                pinsker_pass = False

    report = WalkExactReport(
        stationarity_err=stationarity_error(kernel, mu),
        kl_contraction_pass=kl_pass,
        pinsker_pass=pinsker_pass,
        reversibility_err=reversibility_error(kernel, mu),
        spectral_gap=spectral_gap(kernel, mu),
        k=k,
        support_size=len(kernel.support),
    )
    if not (kl_pass and pinsker_pass):
        logger.warning(f"Exact walk checks failed for {density!r}: {report.to_json()}")
    return report


def _require_same_support(nu: DistributionTable, mu: DistributionTable) -> None:
    if not nu.same_support(mu):
        raise ValueError("distributions are over different support orderings")
