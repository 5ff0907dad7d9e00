import logging
from typing import Dict, Sequence

import numpy as np

from config import Config
from models.noise import NoiseVector
from models.observable import DiagonalObservable
from models.wavefunction import RealWavefunction
from utils.errors import DimensionError, ResourceError

logger = logging.getLogger(__name__)

PAULI: Dict[str, np.ndarray] = {
    'I': np.eye(2, dtype=complex),
    'X': np.array([[0, 1], [1, 0]], dtype=complex),
    'Y': np.array([[0, -1j], [1j, 0]], dtype=complex),
    'Z': np.array([[1, 0], [0, -1]], dtype=complex),
}


class KrausOracle:
    """Brute-force density-matrix evaluation of independent single-qubit depolarizing noise.

    Dense in 4^n, so it is an independent reference for the product formula
    rather than a production path.
    """

    def __init__(self, max_qubits: int = Config.ORACLE_MAX_QUBITS):
        self.max_qubits = max_qubits

    @staticmethod
    def depolarizing_kraus(eta: float) -> list:
        """K_0 = sqrt(1 - eta) I, K_{1,2,3} = sqrt(eta / 3) {X, Y, Z}"""
        return [
            np.sqrt(1.0 - eta) * PAULI['I'],
            np.sqrt(eta / 3.0) * PAULI['X'],
            np.sqrt(eta / 3.0) * PAULI['Y'],
            np.sqrt(eta / 3.0) * PAULI['Z'],
        ]

    def density_matrix(self, state: RealWavefunction) -> np.ndarray:
        self._check_size(state.n)
        psi = state.amplitudes.astype(complex)
        return np.outer(psi, psi.conj())

    def apply_channel(self, rho: np.ndarray, qubit: int, operators: Sequence[np.ndarray]) -> np.ndarray:
        """sum_K K rho K^dagger with every K acting on one qubit"""
        dim = rho.shape[0]
        n = dim.bit_length() - 1
        if rho.shape != (dim, dim) or dim != 2 ** n:
            raise DimensionError(f"Density matrix must be square with side 2^n, got {rho.shape}")
        if not 0 <= qubit < n:
            raise DimensionError(f"Qubit {qubit} outside 0..{n - 1}")
        tensor = rho.reshape((2,) * (2 * n))
        row_axis = n - 1 - qubit
        col_axis = 2 * n - 1 - qubit
        out = np.zeros_like(tensor, dtype=complex)
        for kraus in operators:
            left = np.moveaxis(np.tensordot(kraus, tensor, axes=([1], [row_axis])), 0, row_axis)
            both = np.moveaxis(np.tensordot(kraus.conj(), left, axes=([1], [col_axis])), 0, col_axis)
            out += both
        return out.reshape(dim, dim)

    def noisy_density_matrix(self, state: RealWavefunction, eta: NoiseVector) -> np.ndarray:
        if eta.n != state.n:
            raise DimensionError(f"Noise vector has {eta.n} qubits but the state has {state.n}")
        rho = self.density_matrix(state)
        for qubit in range(state.n):
            rho = self.apply_channel(rho, qubit, self.depolarizing_kraus(float(eta.eta[qubit])))
        return rho

    def expectation(self, rho: np.ndarray, observable: DiagonalObservable) -> float:
        """Tr[rho O] for a diagonal O"""
        if rho.shape[0] != observable.diag.size:
            raise DimensionError("Density matrix and observable act on different registers")
        return float(np.dot(observable.diag, np.real(np.diag(rho))))

    def kraus_oracle(self, state: RealWavefunction, observable: DiagonalObservable, eta: NoiseVector) -> float:
        if observable.n != state.n:
            raise DimensionError(f"Observable acts on {observable.n} qubits but the state has {state.n}")
        rho = self.noisy_density_matrix(state, eta)
        value = self.expectation(rho, observable)
        logger.debug(f"Kraus oracle on {state.n} qubits: {value!r}")
        return value

    def _check_size(self, n: int) -> None:
        if n > self.max_qubits:
            raise ResourceError(
                f"Density-matrix oracle is limited to {self.max_qubits} qubits, got {n}"
            )
