"""
Repository for JSON density documents
"""
import logging

from app.core.base_repository import BaseRepository, PathLike
from app.core.exceptions import DensityDocumentError
from app.services.densities.dpp import DppDensity
from app.services.densities.table_density import TableDensity

logger = logging.getLogger(__name__)


class DensityRepository(BaseRepository):
    """
    Loads explicit tables and DPP vector documents

    Table: {"n": 4, "k": 2, "entries": [[[0, 1], 1.0], [[2, 3], 1.0]]}
    DPP:   {"k": 2, "vectors": [[1, 0], [0, 1], [1, 1]]}
    """

    error_class = DensityDocumentError

    def load_table(self, path: PathLike) -> TableDensity:
        density = TableDensity.from_document(self.read_json(path))
        logger.info(f"Loaded table density {path}: n={density.n}, k={density.k}")
        return density

    def load_dpp(self, path: PathLike) -> DppDensity:
        density = DppDensity.from_document(self.read_json(path))
        logger.info(f"Loaded DPP {path}: n={density.n}, k={density.k}")
        return density
