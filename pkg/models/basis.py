from dataclasses import dataclass
from typing import Optional, Tuple

from utils.walsh import WalshHadamard


@dataclass(frozen=True)
class BasisIndex:
    """Pauli-Z bitmask j on an n-qubit register; bit b is a Z on qubit b"""
    j: int
    n: int

    def __post_init__(self):
        WalshHadamard.check_index(self.j, self.n)

    def active_qubits(self) -> Tuple[int, ...]:
        return WalshHadamard.active_qubits(self.j, self.n)

    def sequency(self) -> int:
        return WalshHadamard.sequency(self.j, self.n)

    def most_uv_qubit(self) -> Optional[int]:
        return WalshHadamard.most_uv_qubit(self.j, self.n)

    def pauli_string(self) -> str:
        return WalshHadamard.pauli_string(self.j, self.n)

    def to_dict(self) -> dict:
        return {
            'j': self.j,
            'n': self.n,
            'pauli': self.pauli_string(),
            'sequency': self.sequency(),
            'q_s': self.most_uv_qubit()
        }
