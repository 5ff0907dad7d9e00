from dataclasses import dataclass, field
from typing import List

import numpy as np

from config import Config
from models.vector import frozen_vector
from utils.errors import NormalizationError
from utils.walsh import WalshHadamard


@dataclass(frozen=True, eq=False)
class RealWavefunction:
    """Normalized real amplitudes over the 2^n computational basis"""
    amplitudes: np.ndarray
    label: str = ""
    n: int = field(init=False)

    def __post_init__(self):
        amplitudes = frozen_vector(self.amplitudes)
        object.__setattr__(self, 'amplitudes', amplitudes)
        object.__setattr__(self, 'n', WalshHadamard.qubit_count(amplitudes.size))
        if not np.all(np.isfinite(amplitudes)):
            raise NormalizationError("Amplitudes must be finite")
        norm = float(np.dot(amplitudes, amplitudes))
        if abs(norm - 1.0) > Config.NORM_TOLERANCE:
            raise NormalizationError(f"Wavefunction norm squared is {norm!r}, expected 1")

    def probabilities(self) -> 'ProbabilityVector':
        squared = self.amplitudes ** 2
        return ProbabilityVector(squared / squared.sum())

    def to_dict(self) -> dict:
        """Convert wavefunction to dictionary"""
        return {
            'label': self.label,
            'n': self.n,
            'amplitudes': self.amplitudes.tolist()
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'RealWavefunction':
        """Create wavefunction from dictionary"""
        return cls(amplitudes=data['amplitudes'], label=data.get('label', ''))


@dataclass(frozen=True, eq=False)
class ProbabilityVector:
    """Computational-basis probabilities |psi_l|^2"""
    probabilities: np.ndarray
    n: int = field(init=False)

    def __post_init__(self):
        probabilities = frozen_vector(self.probabilities)
        object.__setattr__(self, 'probabilities', probabilities)
        object.__setattr__(self, 'n', WalshHadamard.qubit_count(probabilities.size))
        if np.any(probabilities < 0):
            raise NormalizationError("Probabilities must be non-negative")
        total = float(probabilities.sum())
        if abs(total - 1.0) > Config.NORM_TOLERANCE:
            raise NormalizationError(f"Probabilities sum to {total!r}, expected 1")


@dataclass(frozen=True, eq=False)
class ExpectationVector:
    """<O_j> for every Pauli-Z string j, i.e. the transform of the probabilities"""
    values: np.ndarray
    n: int = field(init=False)

    def __post_init__(self):
        values = frozen_vector(self.values)
        object.__setattr__(self, 'values', values)
        object.__setattr__(self, 'n', WalshHadamard.qubit_count(values.size))
        tolerance = Config.EXPECTATION_TOLERANCE
        if abs(values[0] - 1.0) > tolerance:
            raise NormalizationError(f"<O_0> is {values[0]!r}, expected 1")
        if np.any(np.abs(values) > 1.0 + tolerance):
            raise NormalizationError("Expectation values must lie in [-1, 1]")

    def __getitem__(self, j: int) -> float:
        return float(self.values[j])

    def __len__(self) -> int:
        return self.values.size

    def sorted_by_magnitude(self) -> List[int]:
        """Basis indices by descending |<O_j>|, ties broken by j"""
        return sorted(range(self.values.size), key=lambda j: (-abs(self.values[j]), j))

    def to_dict(self) -> dict:
        return {'n': self.n, 'values': self.values.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> 'ExpectationVector':
        return cls(values=data['values'])
