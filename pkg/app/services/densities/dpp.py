"""
k-determinantal point processes: mu(S) = det([v_i]_{i in S})^2
"""
from typing import Any

import numpy as np

from app.core.base_density import SubsetDensity, canonical_subset
from app.core.exceptions import DensityDocumentError
from app.models.walk import Subset


class DppDensity(SubsetDensity):
    """DPP over n vectors of dimension k"""

    def __init__(self, vectors):
        vectors = np.array(vectors, dtype=float)
        if vectors.ndim != 2:
            raise ValueError("vectors must form an n x k array")
        n, k = vectors.shape
        if n < k:
            raise ValueError(f"need at least k={k} vectors, got {n}")
        if not np.all(np.isfinite(vectors)):
            raise ValueError("vector entries must be finite")
        super().__init__(n, k)
        self.vectors = vectors
        self.vectors.setflags(write=False)

    def mass(self, subset: Subset) -> float:
        if self.k == 0:
            return 1.0
        return float(np.linalg.det(self.vectors[list(subset)]) ** 2)

    @classmethod
    def from_document(cls, document: Any) -> "DppDensity":
        """
        Build from {"k": int, "vectors": [[k reals], ...]}

        Raises:
            DensityDocumentError: document does not follow the format
        """
        try:
            k = document["k"]
            raw = document["vectors"]
        except (KeyError, TypeError) as e:
            raise DensityDocumentError(f"DPP document needs 'k' and 'vectors': {e}")
        if not isinstance(k, int) or isinstance(k, bool) or k < 0 or not isinstance(raw, list):
            raise DensityDocumentError("'k' must be a non-negative integer and 'vectors' a list")
        for position, vector in enumerate(raw):
            if not isinstance(vector, list) or len(vector) != k or not all(
                isinstance(x, (int, float)) and not isinstance(x, bool) for x in vector
            ):
                raise DensityDocumentError(f"vector {position} must be a list of {k} numbers")
        try:
            return cls(np.array(raw, dtype=float).reshape(len(raw), k))
        except ValueError as e:
            raise DensityDocumentError(str(e))


def dpp_eval(density: DppDensity, subset) -> float:
    """Squared determinant of the k x k matrix of selected vectors"""
    return density.mass(canonical_subset(subset))
