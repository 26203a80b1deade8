"""
SubsetDensity - interface for unnormalized densities over k-subsets of [n]
"""
import itertools
import math
from abc import ABC, abstractmethod
from typing import Iterable, List, Optional

from app.config.settings import settings
from app.core.exceptions import CapExceededError, EmptySupportError
from app.models.walk import Subset


class SubsetDensity(ABC):
    """
    Oracle mu: C([n], k) -> R>=0 defining Pr[S] proportional to mu(S)

    Subclasses implement `mass` on canonical (sorted) subsets. `support` scans
    all k-subsets unless a subclass knows its support natively.
    """

    def __init__(self, n: int, k: int):
        if n < 0 or not 0 <= k <= n:
            raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
        self.n = n
        self.k = k

    @abstractmethod
    def mass(self, subset: Subset) -> float:
        """mu(subset) for a sorted k-subset"""
        pass

    def eval(self, subset: Iterable[int]) -> float:
        """mu(S); sets of the wrong size or outside [n] have mass 0"""
        canonical = canonical_subset(subset)
        if len(canonical) != self.k or (canonical and not 0 <= canonical[0] <= canonical[-1] < self.n):
            return 0.0
        return self.mass(canonical)

    def support(self, cap: Optional[int] = None) -> List[Subset]:
        """
        Sorted list of all k-subsets with positive mass

        Raises:
            CapExceededError: too many subsets to scan, or support above the cap
            EmptySupportError: no subset has positive mass
        """
        cap = settings.SUPPORT_CAP if cap is None else cap
        subsets = math.comb(self.n, self.k)
        if subsets > settings.SUBSET_SCAN_CAP:
            raise CapExceededError("subset scan", subsets, settings.SUBSET_SCAN_CAP)
        support = [s for s in itertools.combinations(range(self.n), self.k) if self.mass(s) > 0]
        return self._checked_support(support, cap)

    def _checked_support(self, support: List[Subset], cap: int) -> List[Subset]:
        if not support:
            raise EmptySupportError(f"{type(self).__name__} has no positive-mass subset")
        if len(support) > cap:
            raise CapExceededError("density support", len(support), cap)
        return sorted(support)

    def scaled(self, factor: float) -> "SubsetDensity":
        """factor * mu, same support"""
        return ScaledDensity(self, factor)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, k={self.k})"


class ScaledDensity(SubsetDensity):
    """Positive multiple of another density"""

    def __init__(self, base: SubsetDensity, factor: float):
        if not factor > 0:
            raise ValueError(f"scale factor must be positive, got {factor}")
        super().__init__(base.n, base.k)
        self.base = base
        self.factor = factor

    def mass(self, subset: Subset) -> float:
        return self.factor * self.base.mass(subset)

    def support(self, cap: Optional[int] = None) -> List[Subset]:
        return self.base.support(cap)


def canonical_subset(subset: Iterable[int]) -> Subset:
    """Sorted tuple form used as the key for every subset"""
    return tuple(sorted(set(subset)))
