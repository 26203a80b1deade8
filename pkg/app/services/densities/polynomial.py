"""
Generating-polynomial checks: Hessian of g_mu and its positive eigenvalues

g_mu(z) = sum_S mu(S) prod_{i in S} z_i is multiaffine, so the Hessian has a
zero diagonal. A log-concave g_mu has at most one positive Hessian eigenvalue
anywhere in the positive orthant; the count below tests that necessary condition.
"""
import itertools
import math
from typing import Optional

import numpy as np

from app.config.settings import settings
from app.core.base_density import SubsetDensity
from app.core.exceptions import CapExceededError


def hessian_at(density: SubsetDensity, z) -> np.ndarray:
    """
    Hessian of g_mu at a strictly positive point z

    Entry (i, j), i != j: sum over S containing i and j of mu(S) * prod_{l in S - {i,j}} z_l.

    Raises:
        CapExceededError: support too large to enumerate
    """
    z = np.asarray(z, dtype=float)
    if z.shape != (density.n,):
        raise ValueError(f"z must have length {density.n}")
    if not np.all(z > 0):
        raise ValueError("z must be strictly positive")

    hessian = np.zeros((density.n, density.n))
    if density.k < 2:
        return hessian

    for subset in density.support():
        weight = density.mass(subset)
        for i, j in itertools.combinations(subset, 2):
            rest = math.prod(z[l] for l in subset if l != i and l != j)
            hessian[i, j] += weight * rest
            hessian[j, i] += weight * rest
    return hessian


def positive_eigenvalue_count(
    matrix,
    tolerance: Optional[float] = None,
    dimension_cap: Optional[int] = None,
) -> int:
    """
    Number of eigenvalues above tolerance * (largest absolute eigenvalue)

    Raises:
        CapExceededError: matrix dimension above the cap
    """
    matrix = np.asarray(matrix, dtype=float)
    tolerance = settings.EIGENVALUE_RELATIVE_TOLERANCE if tolerance is None else tolerance
    dimension_cap = settings.HESSIAN_DIMENSION_CAP if dimension_cap is None else dimension_cap
    if matrix.shape[0] > dimension_cap:
        raise CapExceededError("Hessian dimension", matrix.shape[0], dimension_cap)
    if matrix.size == 0:
        return 0

    eigenvalues = np.linalg.eigvalsh((matrix + matrix.T) / 2)
    scale = float(np.max(np.abs(eigenvalues)))
    if scale == 0.0:
        return 0
    return int(np.sum(eigenvalues > tolerance * scale))
