"""
Base class for loading documents from disk
"""
import json
import logging
from pathlib import Path
from typing import Any, Type, Union

from app.core.exceptions import DownUpError

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class BaseRepository:
    """
    Reads text and JSON documents

    Subclasses set `error_class`; every I/O or decoding failure is re-raised
    as that domain error so callers only handle DownUpError.
    """

    error_class: Type[DownUpError] = DownUpError

    def __init__(self, encoding: str = "utf-8"):
        self.encoding = encoding

    def read_text(self, path: PathLike) -> str:
        """
        Read a whole document

        Raises:
            error_class: file missing, unreadable or not decodable
        """
        path = Path(path)
        try:
            text = path.read_text(encoding=self.encoding)
        except (OSError, UnicodeDecodeError) as e:
            logger.error(f"Cannot read {path}: {e}")
            raise self.error_class(f"cannot read {path}: {e}") from e
        logger.debug(f"Read {len(text)} characters from {path}")
        return text

    def read_json(self, path: PathLike) -> Any:
        """
        Read and decode a JSON document

        Raises:
            error_class: file unreadable or not valid JSON
        """
        text = self.read_text(path)
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise self.error_class(f"{path} is not valid JSON: {e}") from e
