import itertools
import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from config import Config
from models.noise import DecayFit, NoisePolynomial, NoiseVector, QubitLayout, SensitivityProfile
from models.observable import PauliDecomposition
from models.wavefunction import ExpectationVector, RealWavefunction
from services.state_service import StateService
from utils.errors import DimensionError, FitError, ParameterError, UndefinedSensitivityError
from utils.walsh import WalshHadamard

logger = logging.getLogger(__name__)

# multiplicative factor picked up by a Z on a depolarized qubit is 1 - FOUR_THIRDS * eta
FOUR_THIRDS = 4.0 / 3.0


class NoiseService:
    """Analytic propagation of per-qubit depolarizing noise into diagonal expectation values"""

    def __init__(self, state_service: Optional[StateService] = None):
        self.state_service = state_service or StateService()

    def noisy_expectation(self, decomposition: PauliDecomposition, expectations: ExpectationVector,
                          eta: NoiseVector) -> float:
        """sum_j beta_j <O_j> prod_{q: j_q = 1} (1 - 4 eta_q / 3)"""
        self._check_register(decomposition, expectations)
        if eta.n != decomposition.n:
            raise DimensionError(f"Noise vector has {eta.n} qubits but the observable has {decomposition.n}")
        weights = decomposition.beta * expectations.values
        return float(np.dot(weights, self.damping_factors(eta)))

    @staticmethod
    def damping_factors(eta: NoiseVector) -> np.ndarray:
        """Vector over j of prod_{q in j} (1 - 4 eta_q / 3), built as a Kronecker product"""
        factors = np.ones(1)
        for q in reversed(range(eta.n)):
            factors = np.kron(factors, np.array([1.0, 1.0 - FOUR_THIRDS * eta.eta[q]]))
        return factors

    def noise_polynomial(self, j: int, expectations: ExpectationVector) -> NoisePolynomial:
        """<O_j> prod_{q in j} (1 - 4 eta_q / 3) expanded over subsets of the active qubits"""
        n = expectations.n
        active = WalshHadamard.active_qubits(j, n)
        value = expectations[j]
        terms = {}
        for size in range(len(active) + 1):
            for subset in itertools.combinations(active, size):
                terms[subset] = value * (-FOUR_THIRDS) ** size
        return NoisePolynomial(n=n, terms=terms)

    def observable_polynomial(self, decomposition: PauliDecomposition,
                              expectations: ExpectationVector) -> NoisePolynomial:
        """Exact multilinear <O>(eta): the coefficient of eta_S is (-4/3)^|S| sum_{j superset of S} beta_j <O_j>"""
        self._check_register(decomposition, expectations)
        n = decomposition.n
        sums = self._superset_sums(decomposition.beta * expectations.values, n)
        terms = {}
        for mask in range(2 ** n):
            coefficient = float(sums[mask])
            if coefficient == 0.0:
                continue
            qubits = WalshHadamard.active_qubits(mask, n)
            terms[qubits] = coefficient * (-FOUR_THIRDS) ** len(qubits)
        return NoisePolynomial(n=n, terms=terms)

    def sensitivities(self, decomposition: PauliDecomposition, expectations: ExpectationVector) -> SensitivityProfile:
        """gamma_q = -(4/3) sum_{j: j_q = 1} beta_j <O_j> / sum_j beta_j <O_j>"""
        self._check_register(decomposition, expectations)
        n = decomposition.n
        weights = decomposition.beta * expectations.values
        noiseless = math.fsum(weights)
        if abs(noiseless) <= Config.SENSITIVITY_THRESHOLD:
            raise UndefinedSensitivityError(
                f"Noiseless expectation {noiseless:.3e} vanishes; relative sensitivities are undefined"
            )
        tensor = weights.reshape((2,) * n)
        gamma = np.array([
            -FOUR_THIRDS * float(np.take(tensor, 1, axis=n - 1 - q).sum()) / noiseless
            for q in range(n)
        ]) + 0.0  # no -0.0 in reports
        profile = SensitivityProfile(gamma, expectation_noiseless=noiseless, label=decomposition.label)
        if profile.is_zero():
            logger.warning("Observable has no Z content; every sensitivity is zero")
        return profile

    def decay_fit(self, profile: SensitivityProfile) -> DecayFit:
        """Fit log gamma against k = n - 1 - q (k = 0 at the IR qubit); xi < 0 means decay toward the UV"""
        gamma = profile.gamma
        positions = (profile.n - 1) - np.arange(profile.n)
        positive = gamma > 0
        if int(positive.sum()) < 3:
            raise FitError(f"Decay fit needs at least 3 positive sensitivities, got {int(positive.sum())}")
        x = positions[positive].astype(float)
        y = np.log(gamma[positive])
        if np.ptp(y) == 0.0:
            return DecayFit(xi=0.0, quality=1.0, intercept=float(y[0]), points=int(x.size))
        result = stats.linregress(x, y)
        return DecayFit(
            xi=float(result.slope),
            quality=float(result.rvalue ** 2),
            intercept=float(result.intercept),
            points=int(x.size)
        )

    def sensitivity_sweep(self, states: Sequence[RealWavefunction],
                          decomposition: PauliDecomposition) -> List[Tuple[SensitivityProfile, Optional[DecayFit]]]:
        """Profiles and decay fits for a family of wavefunctions"""
        results = []
        for state in states:
            expectations = self.state_service.expectations(state)
            profile = self.sensitivities(decomposition, expectations)
            profile = SensitivityProfile(profile.gamma, profile.expectation_noiseless, label=state.label)
            try:
                fit = self.decay_fit(profile)
            except FitError as e:
                logger.info(f"No decay fit for {state.label}: {e}")
                fit = None
            results.append((profile, fit))
        return results

    def best_layout(self, profile: SensitivityProfile, device_eta: Sequence[float]) -> QubitLayout:
        """Place the most sensitive logical qubit on the most reliable device.

        Minimizes the linearized fractional error sum_q |gamma_q| eta_device(q)
        over all one-to-one placements.
        """
        device_eta = NoiseVector(device_eta).eta
        if device_eta.size != profile.n:
            raise DimensionError(f"{device_eta.size} device error rates given for {profile.n} logical qubits")
        magnitudes = profile.magnitudes()
        by_sensitivity = sorted(range(profile.n), key=lambda q: (-magnitudes[q], q))
        by_reliability = sorted(range(profile.n), key=lambda d: (device_eta[d], d))
        placement = [0] * profile.n
        for qubit, device in zip(by_sensitivity, by_reliability):
            placement[qubit] = device
        placed = math.fsum(magnitudes[q] * device_eta[placement[q]] for q in range(profile.n))
        identity = math.fsum(magnitudes * device_eta)
        return QubitLayout(device_for_qubit=tuple(placement), fractional_error=placed, identity_error=identity)

    @staticmethod
    def replacement_probability(eta: float) -> float:
        """eta' = 3 eta / 4, the probability of replacement by the maximally mixed state"""
        if not 0.0 <= eta <= 1.0:
            raise ParameterError(f"Depolarizing probability must lie in [0, 1], got {eta}")
        return 0.75 * eta

    @staticmethod
    def from_replacement_probability(eta_prime: float) -> float:
        if not 0.0 <= eta_prime <= 0.75:
            raise ParameterError(f"Replacement probability must lie in [0, 3/4], got {eta_prime}")
        return eta_prime / 0.75

    @staticmethod
    def _superset_sums(values: np.ndarray, n: int) -> np.ndarray:
        """out[S] = sum over masks j containing S of values[j]"""
        tensor = np.array(values, dtype=float).reshape((2,) * n)
        for axis in range(n):
            index_zero = [slice(None)] * n
            index_one = [slice(None)] * n
            index_zero[axis] = 0
            index_one[axis] = 1
            tensor[tuple(index_zero)] += tensor[tuple(index_one)]
        return tensor.reshape(-1)

    @staticmethod
    def _check_register(decomposition: PauliDecomposition, expectations: ExpectationVector) -> None:
        if decomposition.n != expectations.n:
            raise DimensionError(
                f"Observable acts on {decomposition.n} qubits but the state has {expectations.n}"
            )
