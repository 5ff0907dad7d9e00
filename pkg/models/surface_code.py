from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from config import Config
from utils.errors import ParameterError


@dataclass(frozen=True)
class SurfaceCodeParams:
    """Surface code fit P_L = c0 (p / p_th)^((d + 1) / 2) plus the precision target"""
    p: float = 1e-3
    p_th: float = Config.P_TH
    c0: float = Config.C0
    n_cycles: int = 1
    epsilon: float = 1e-5
    d_min: int = Config.D_MIN
    d_max: int = Config.D_MAX

    def __post_init__(self):
        if not 0 < self.p_th:
            raise ParameterError(f"Threshold must be positive, got {self.p_th}")
        if not 0 < self.p < self.p_th:
            raise ParameterError(f"Physical error rate must satisfy 0 < p < p_th = {self.p_th}, got {self.p}")
        if not self.c0 > 0:
            raise ParameterError(f"Prefactor c0 must be positive, got {self.c0}")
        if int(self.n_cycles) != self.n_cycles or self.n_cycles < 1:
            raise ParameterError(f"Cycle count must be a positive integer, got {self.n_cycles}")
        if not self.epsilon > 0:
            raise ParameterError(f"Target fractional error must be positive, got {self.epsilon}")
        if self.d_min < 1 or self.d_min % 2 == 0:
            raise ParameterError(f"d_min must be a positive odd integer, got {self.d_min}")
        if self.d_max < self.d_min or self.d_max % 2 == 0:
            raise ParameterError(f"d_max must be odd and >= d_min, got {self.d_max}")

    @classmethod
    def per_cycle(cls, eps_per_cycle: float, **kwargs) -> 'SurfaceCodeParams':
        """Params for a per-cycle target with n_cycles folded to 1"""
        kwargs.pop('n_cycles', None)
        kwargs.pop('epsilon', None)
        return cls(n_cycles=1, epsilon=eps_per_cycle, **kwargs)

    @property
    def eps_per_cycle(self) -> float:
        return self.epsilon / self.n_cycles

    @property
    def c0_bar(self) -> float:
        return self.n_cycles * self.c0

    @property
    def ratio(self) -> float:
        return self.p / self.p_th

    def distances(self) -> List[int]:
        return list(range(self.d_min, self.d_max + 1, 2))

    def to_dict(self) -> dict:
        return {
            'p': self.p,
            'p_th': self.p_th,
            'c0': self.c0,
            'n_cycles': self.n_cycles,
            'epsilon': self.epsilon,
            'eps_per_cycle': self.eps_per_cycle,
            'd_min': self.d_min,
            'd_max': self.d_max
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'SurfaceCodeParams':
        return cls(**{key: data[key] for key in
                      ('p', 'p_th', 'c0', 'n_cycles', 'epsilon', 'd_min', 'd_max') if key in data})


@dataclass(frozen=True)
class DistanceAssignment:
    """Odd code distance per logical qubit (qubit 0 first)"""
    distances: Tuple[int, ...]
    achieved_error_per_cycle: float
    scheme: str = ""
    total_physical: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, 'distances', tuple(int(d) for d in self.distances))
        object.__setattr__(self, 'total_physical', sum(d * d for d in self.distances))

    @property
    def n(self) -> int:
        return len(self.distances)

    def ir_first(self) -> List[int]:
        return list(self.distances[::-1])

    def to_dict(self) -> dict:
        return {
            'scheme': self.scheme,
            'd_uv_first': list(self.distances),
            'd_ir_first': self.ir_first(),
            'total_physical': self.total_physical,
            'achieved_error_per_cycle': self.achieved_error_per_cycle
        }


@dataclass(frozen=True)
class SweepPoint:
    """One target of a reduction sweep; None marks an infeasible scheme"""
    eps_per_cycle: float
    homogeneous_qubits: Optional[int]
    uniform_qubits: Optional[int]
    optimized_qubits: Optional[int]

    @staticmethod
    def _reduction(hetero: Optional[int], homo: Optional[int]) -> Optional[float]:
        if hetero is None or homo is None:
            return None
        return 100.0 * (1.0 - hetero / homo)

    @property
    def reduction_uniform_pct(self) -> Optional[float]:
        return self._reduction(self.uniform_qubits, self.homogeneous_qubits)

    @property
    def reduction_optimized_pct(self) -> Optional[float]:
        return self._reduction(self.optimized_qubits, self.homogeneous_qubits)

    def to_dict(self) -> dict:
        return {
            'eps_per_cycle': self.eps_per_cycle,
            'homogeneous_qubits': self.homogeneous_qubits,
            'uniform_qubits': self.uniform_qubits,
            'optimized_qubits': self.optimized_qubits,
            'reduction_uniform_pct': self.reduction_uniform_pct,
            'reduction_optimized_pct': self.reduction_optimized_pct
        }
