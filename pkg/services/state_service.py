import logging
import math
from typing import Optional

import numpy as np

from config import Config
from models.wavefunction import ExpectationVector, ProbabilityVector, RealWavefunction
from repositories.storage_interface import VectorRepositoryInterface
from utils.errors import DimensionError, NormalizationError, ParameterError
from utils.walsh import WalshHadamard

logger = logging.getLogger(__name__)


class StateService:
    """Digitized real wavefunctions and their Walsh-basis expectation vectors"""

    def __init__(self, vector_repository: Optional[VectorRepositoryInterface] = None):
        self.vector_repository = vector_repository

    def gaussian(self, n: int, mu: float, sigma: float) -> RealWavefunction:
        """psi_l = N exp[-(l - mu)^2 / (4 sigma^2)] on the grid l = 0 .. 2^n - 1"""
        n = WalshHadamard.check_qubits(n)
        if not (math.isfinite(sigma) and sigma > 0):
            raise ParameterError(f"Gaussian width must be positive, got {sigma}")
        if not math.isfinite(mu):
            raise ParameterError(f"Gaussian centre must be finite, got {mu}")
        grid = np.arange(2 ** n, dtype=float)
        exponent = -((grid - mu) ** 2) / (4.0 * sigma ** 2)
        # shift by the maximum so that far-off centres do not underflow to zero
        amplitudes = np.exp(exponent - exponent.max())
        return RealWavefunction(self._normalized(amplitudes), label=f"gaussian(mu={mu:g}, sigma={sigma:g})")

    def random_state(self, n: int, seed: Optional[int] = None) -> RealWavefunction:
        """i.i.d. uniform [0, 1) amplitudes, normalized"""
        n = WalshHadamard.check_qubits(n)
        rng = np.random.default_rng(seed)
        amplitudes = rng.random(2 ** n)
        return RealWavefunction(self._normalized(amplitudes), label=f"random(seed={seed})")

    def basis_state(self, n: int, index: int = 0) -> RealWavefunction:
        index = WalshHadamard.check_index(index, n)
        amplitudes = np.zeros(2 ** n)
        amplitudes[index] = 1.0
        return RealWavefunction(amplitudes, label=f"basis({index})")

    def from_amplitudes(self, amplitudes, label: str = "") -> RealWavefunction:
        """Accept amplitudes within the load slack of unit norm, renormalizing them"""
        amplitudes = np.asarray(amplitudes, dtype=float)
        norm = float(np.sqrt(np.dot(amplitudes, amplitudes)))
        if not math.isfinite(norm) or abs(norm - 1.0) > Config.LOAD_NORM_SLACK:
            raise NormalizationError(
                f"State norm {norm:.6g} is not within {Config.LOAD_NORM_SLACK:.0%} of 1; refusing to renormalize"
            )
        return RealWavefunction(amplitudes / norm, label=label)

    def load_state(self, path: str, n: Optional[int] = None) -> RealWavefunction:
        """Read a state file through the repository"""
        if self.vector_repository is None:
            raise ParameterError("No vector repository configured for file-backed states")
        amplitudes = self.vector_repository.load_vector(path)
        state = self.from_amplitudes(amplitudes, label=f"file({path})")
        if n is not None and state.n != n:
            raise DimensionError(f"State file {path} holds {state.n} qubits but n = {n} was requested")
        logger.debug(f"Loaded {state.n}-qubit state from {path}")
        return state

    def probabilities(self, state: RealWavefunction) -> ProbabilityVector:
        return state.probabilities()

    def expectations(self, state: RealWavefunction) -> ExpectationVector:
        """<O_j> = sum_l |psi_l|^2 (-1)^(j.l), the transform of the probability vector"""
        if not isinstance(state, RealWavefunction):
            state = RealWavefunction(state)
        probabilities = state.probabilities().probabilities
        return ExpectationVector(WalshHadamard.fwht(probabilities))

    @staticmethod
    def _normalized(amplitudes: np.ndarray) -> np.ndarray:
        norm = float(np.sqrt(np.dot(amplitudes, amplitudes)))
        if norm == 0.0 or not math.isfinite(norm):
            raise ParameterError("Wavefunction has no support on the grid")
        return amplitudes / norm
