from abc import ABC, abstractmethod
from typing import Any, Dict

import numpy as np


class VectorRepositoryInterface(ABC):
    """Vector storage interface following Interface Segregation Principle"""

    @abstractmethod
    def load_vector(self, path: str) -> np.ndarray:
        """Read a real vector (state amplitudes or observable diagonal)"""
        pass

    @abstractmethod
    def save_vector(self, path: str, values: np.ndarray) -> None:
        """Write a real vector as a JSON array"""
        pass


class RunConfigRepositoryInterface(ABC):
    """Run-config storage interface following Interface Segregation Principle"""

    @abstractmethod
    def load_config(self, path: str) -> Dict[str, Any]:
        """Read a JSON run-config document"""
        pass


class ReportRepositoryInterface(ABC):
    """Report sink interface following Interface Segregation Principle"""

    @abstractmethod
    def write_report(self, path: str, content: str) -> None:
        """Persist rendered report text"""
        pass
