from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from models.vector import frozen_vector
from utils.errors import ValidationError
from utils.walsh import WalshHadamard


@dataclass(frozen=True, eq=False)
class DiagonalObservable:
    """Observable measured in its eigenbasis: eigenvalues on the computational basis states"""
    diag: np.ndarray
    label: str = ""
    n: int = field(init=False)

    def __post_init__(self):
        diag = frozen_vector(self.diag)
        object.__setattr__(self, 'diag', diag)
        object.__setattr__(self, 'n', WalshHadamard.qubit_count(diag.size))
        if not np.all(np.isfinite(diag)):
            raise ValidationError("Observable eigenvalues must be finite")

    def to_dict(self) -> dict:
        return {'label': self.label, 'n': self.n, 'diag': self.diag.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> 'DiagonalObservable':
        return cls(diag=data['diag'], label=data.get('label', ''))


@dataclass(frozen=True, eq=False)
class PauliDecomposition:
    """Dense coefficients beta_j of an observable on the O_j basis"""
    beta: np.ndarray
    label: str = ""
    n: int = field(init=False)

    def __post_init__(self):
        beta = frozen_vector(self.beta)
        object.__setattr__(self, 'beta', beta)
        object.__setattr__(self, 'n', WalshHadamard.qubit_count(beta.size))
        if not np.all(np.isfinite(beta)):
            raise ValidationError("Decomposition coefficients must be finite")

    def __getitem__(self, j: int) -> float:
        return float(self.beta[j])

    def nonzero(self, tolerance: float = 0.0) -> np.ndarray:
        """Indices with |beta_j| above tolerance"""
        return np.flatnonzero(np.abs(self.beta) > tolerance)

    def to_dict(self) -> dict:
        return {'label': self.label, 'n': self.n, 'beta': self.beta.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> 'PauliDecomposition':
        return cls(beta=data['beta'], label=data.get('label', ''))


@dataclass(frozen=True)
class SequencyRow:
    """One row of a sequency-ordered decomposition report"""
    j: int
    sequency: int
    most_uv_qubit: Optional[int]
    beta: float
    pauli: str

    def to_dict(self) -> dict:
        return {
            'j': self.j,
            'sequency': self.sequency,
            'q_s': self.most_uv_qubit,
            'beta': self.beta,
            'pauli': self.pauli
        }
