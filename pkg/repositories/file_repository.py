import json
import logging
import os
from pathlib import Path
from typing import Any, Dict

import numpy as np

from repositories.storage_interface import (
    VectorRepositoryInterface, RunConfigRepositoryInterface, ReportRepositoryInterface
)
from utils.errors import DimensionError, ValidationError
from utils.walsh import WalshHadamard

logger = logging.getLogger(__name__)


class FileVectorRepository(VectorRepositoryInterface):
    """Vectors stored as a JSON array or as one decimal number per line"""

    def load_vector(self, path: str) -> np.ndarray:
        """Read a real vector whose length is a power of two"""
        try:
            text = Path(path).read_text(encoding='utf-8')
        except OSError as e:
            raise ValidationError(f"Cannot read vector file {path}: {e}") from e

        stripped = text.strip()
        if not stripped:
            raise ValidationError(f"Vector file {path} is empty")

        if stripped.startswith('['):
            try:
                values = json.loads(stripped)
            except json.JSONDecodeError as e:
                raise ValidationError(f"Invalid JSON in {path}: {e}") from e
            if not isinstance(values, list) or any(isinstance(v, (list, dict, bool)) or v is None for v in values):
                raise ValidationError(f"{path} must hold a flat JSON array of numbers")
        else:
            values = []
            for line_number, line in enumerate(stripped.splitlines(), start=1):
                line = line.strip()
                if not line or line.startswith('#'):
                    continue
                try:
                    values.append(float(line))
                except ValueError as e:
                    raise ValidationError(f"{path}:{line_number}: not a number: {line!r}") from e

        try:
            vector = np.array(values, dtype=float)
        except (TypeError, ValueError) as e:
            raise ValidationError(f"{path} holds non-numeric entries") from e
        if not np.all(np.isfinite(vector)):
            raise ValidationError(f"{path} holds non-finite entries")
        try:
            WalshHadamard.qubit_count(vector.size)
        except DimensionError as e:
            raise DimensionError(f"{path}: {e}") from e
        logger.debug(f"Loaded {vector.size} values from {path}")
        return vector

    def save_vector(self, path: str, values: np.ndarray) -> None:
        """Write a real vector as a JSON array"""
        self._ensure_parent(path)
        Path(path).write_text(json.dumps([float(v) for v in values]) + '\n', encoding='utf-8')

    @staticmethod
    def _ensure_parent(path: str) -> None:
        directory = os.path.dirname(path)
        if directory:
            Path(directory).mkdir(parents=True, exist_ok=True)


class JsonRunConfigRepository(RunConfigRepositoryInterface):
    """Run configs stored as JSON documents mirroring RunConfig"""

    def load_config(self, path: str) -> Dict[str, Any]:
        try:
            data = json.loads(Path(path).read_text(encoding='utf-8'))
        except OSError as e:
            raise ValidationError(f"Cannot read config file {path}: {e}") from e
        except json.JSONDecodeError as e:
            raise ValidationError(f"Invalid JSON in config file {path}: {e}") from e
        if not isinstance(data, dict):
            raise ValidationError(f"Config file {path} must hold a JSON object")
        return data


class FileReportRepository(ReportRepositoryInterface):
    """Reports written to disk, creating parent directories"""

    def write_report(self, path: str, content: str) -> None:
        FileVectorRepository._ensure_parent(path)
        Path(path).write_text(content, encoding='utf-8')
        logger.info(f"Report written to {path}")
