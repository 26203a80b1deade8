"""
Explicit-table densities and the uniform matroid
"""
import math
from typing import Any, Dict, Iterable, List, Optional

from app.config.settings import settings
from app.core.base_density import SubsetDensity, canonical_subset
from app.core.exceptions import DensityDocumentError
from app.models.walk import Subset


class TableDensity(SubsetDensity):
    """Density given by an explicit map from k-subsets to masses; unlisted subsets have mass 0"""

    def __init__(self, n: int, k: int, entries: Dict[Iterable[int], float]):
        super().__init__(n, k)
        self.entries: Dict[Subset, float] = {}
        for subset, weight in entries.items():
            key = canonical_subset(subset)
            if len(key) != k:
                raise ValueError(f"subset {list(subset)} does not have {k} distinct elements")
            if key and not 0 <= key[0] <= key[-1] < n:
                raise ValueError(f"subset {list(subset)} leaves the ground set [0, {n})")
            if not (math.isfinite(weight) and weight >= 0):
                raise ValueError(f"weight of {list(subset)} must be finite and non-negative")
            self.entries[key] = self.entries.get(key, 0.0) + float(weight)

    def mass(self, subset: Subset) -> float:
        return self.entries.get(subset, 0.0)

    def support(self, cap: Optional[int] = None) -> List[Subset]:
        cap = settings.SUPPORT_CAP if cap is None else cap
        return self._checked_support([s for s, w in self.entries.items() if w > 0], cap)

    @classmethod
    def from_document(cls, document: Any) -> "TableDensity":
        """
        Build from {"n": int, "k": int, "entries": [[[i, ...], weight], ...]}

        Raises:
            DensityDocumentError: document does not follow the format
        """
        try:
            n = document["n"]
            k = document["k"]
            raw_entries = document["entries"]
        except (KeyError, TypeError) as e:
            raise DensityDocumentError(f"table document needs 'n', 'k' and 'entries': {e}")
        if not (_is_int(n) and _is_int(k)) or not isinstance(raw_entries, list):
            raise DensityDocumentError("'n' and 'k' must be integers and 'entries' a list")

        entries: Dict[Subset, float] = {}
        for position, entry in enumerate(raw_entries):
            if (
                not isinstance(entry, list)
                or len(entry) != 2
                or not isinstance(entry[0], list)
                or not all(_is_int(i) for i in entry[0])
                or not _is_number(entry[1])
            ):
                raise DensityDocumentError(
                    f"entry {position} must be [[element, ...], weight], got {entry!r}"
                )
            key = canonical_subset(entry[0])
            if key in entries:
                raise DensityDocumentError(f"entry {position} repeats subset {list(key)}")
            entries[key] = float(entry[1])

        try:
            return cls(n, k, entries)
        except ValueError as e:
            raise DensityDocumentError(str(e))

    def to_document(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "entries": [[list(s), w] for s, w in sorted(self.entries.items())],
        }


class UniformMatroidDensity(SubsetDensity):
    """U(k, n): every k-subset has mass 1"""

    def mass(self, subset: Subset) -> float:
        return 1.0


def uniform_matroid_density(n: int, k: int) -> UniformMatroidDensity:
    return UniformMatroidDensity(n, k)


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)
