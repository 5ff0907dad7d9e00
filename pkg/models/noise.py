from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from models.vector import frozen_vector
from utils.errors import DimensionError, ParameterError, ValidationError


@dataclass(frozen=True, eq=False)
class NoiseVector:
    """Per-qubit depolarizing probabilities eta_q (qubit 0 first)"""
    eta: np.ndarray
    n: int = field(init=False)

    def __post_init__(self):
        eta = frozen_vector(self.eta)
        object.__setattr__(self, 'eta', eta)
        object.__setattr__(self, 'n', eta.size)
        if eta.size < 1:
            raise DimensionError("Noise vector must cover at least one qubit")
        if not np.all((eta >= 0.0) & (eta <= 1.0)):
            raise ParameterError(f"Depolarizing probabilities must lie in [0, 1], got {eta.tolist()}")

    @classmethod
    def zeros(cls, n: int) -> 'NoiseVector':
        return cls(np.zeros(n))

    @classmethod
    def uniform(cls, n: int, eta: float) -> 'NoiseVector':
        return cls(np.full(n, eta))

    @classmethod
    def single(cls, n: int, qubit: int, eta: float) -> 'NoiseVector':
        values = np.zeros(n)
        values[qubit] = eta
        return cls(values)

    def to_dict(self) -> dict:
        return {'eta': self.eta.tolist()}


@dataclass(frozen=True, eq=False)
class SensitivityProfile:
    """Linear noise coefficients gamma_q, stored qubit 0 (UV) first.

    <O>(eta) = <O>(0) [1 + sum_q gamma_q eta_q + O(eta^2)]
    """
    gamma: np.ndarray
    expectation_noiseless: Optional[float] = None
    label: str = ""
    n: int = field(init=False)

    def __post_init__(self):
        gamma = frozen_vector(self.gamma)
        object.__setattr__(self, 'gamma', gamma)
        object.__setattr__(self, 'n', gamma.size)
        if gamma.size < 1:
            raise DimensionError("Sensitivity profile must cover at least one qubit")
        if not np.all(np.isfinite(gamma)):
            raise ValidationError("Sensitivities must be finite")

    @classmethod
    def from_ir_first(cls, values: Sequence[float], label: str = "") -> 'SensitivityProfile':
        """Build from a listing that starts at the IR qubit n-1"""
        return cls(np.asarray(values, dtype=float)[::-1], label=label)

    def uv_first(self) -> List[float]:
        return self.gamma.tolist()

    def ir_first(self) -> List[float]:
        return self.gamma[::-1].tolist()

    def magnitudes(self) -> np.ndarray:
        return np.abs(self.gamma)

    def is_zero(self) -> bool:
        return not np.any(self.gamma)

    def to_dict(self) -> dict:
        return {
            'label': self.label,
            'gamma_uv_first': self.uv_first(),
            'gamma_ir_first': self.ir_first(),
            'expectation_noiseless': self.expectation_noiseless
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'SensitivityProfile':
        if 'gamma_uv_first' in data:
            gamma = data['gamma_uv_first']
        else:
            gamma = list(data['gamma_ir_first'])[::-1]
        return cls(gamma, expectation_noiseless=data.get('expectation_noiseless'), label=data.get('label', ''))


@dataclass(frozen=True)
class NoisePolynomial:
    """Multilinear polynomial in the eta_q; keys are sorted tuples of qubit indices"""
    n: int
    terms: Dict[Tuple[int, ...], float]

    def __post_init__(self):
        for qubits in self.terms:
            if tuple(sorted(set(qubits))) != tuple(qubits):
                raise ValidationError(f"Monomial {qubits} must list distinct qubits in ascending order")
            if any(q < 0 or q >= self.n for q in qubits):
                raise DimensionError(f"Monomial {qubits} references a qubit outside 0..{self.n - 1}")

    @property
    def constant(self) -> float:
        return self.terms.get((), 0.0)

    def coefficient(self, *qubits: int) -> float:
        return self.terms.get(tuple(sorted(qubits)), 0.0)

    def linear(self) -> np.ndarray:
        return np.array([self.coefficient(q) for q in range(self.n)])

    def evaluate(self, eta: NoiseVector) -> float:
        if eta.n != self.n:
            raise DimensionError(f"Noise vector has {eta.n} qubits, polynomial has {self.n}")
        total = 0.0
        for qubits, coefficient in self.terms.items():
            total += coefficient * float(np.prod([eta.eta[q] for q in qubits]))
        return total

    def degree(self) -> int:
        return max((len(qubits) for qubits in self.terms), default=0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for qubits in sorted(self.terms, key=lambda k: (len(k), k)):
            coefficient = self.terms[qubits]
            monomial = ' '.join(f"eta{q}" for q in qubits)
            parts.append(f"{coefficient:+.3f}" + (f" {monomial}" if monomial else ""))
        return ' '.join(parts)

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'terms': [
                {'qubits': list(qubits), 'coefficient': coefficient}
                for qubits, coefficient in sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0]))
            ]
        }


@dataclass(frozen=True)
class DecayFit:
    """Least-squares fit log gamma = intercept + xi * k, k counted from the IR qubit"""
    xi: float
    quality: float
    intercept: float
    points: int

    def to_dict(self) -> dict:
        return {'xi': self.xi, 'fit_quality': self.quality, 'intercept': self.intercept, 'points': self.points}


@dataclass(frozen=True)
class QubitLayout:
    """Placement of logical qubits on devices with unequal error rates"""
    device_for_qubit: Tuple[int, ...]
    fractional_error: float
    identity_error: float

    def to_dict(self) -> dict:
        return {
            'device_for_qubit': list(self.device_for_qubit),
            'fractional_error': self.fractional_error,
            'identity_error': self.identity_error
        }
