import logging
from typing import Optional

from models.noise import NoiseVector, SensitivityProfile
from models.observable import DiagonalObservable, PauliDecomposition
from models.run_config import RunConfig
from models.wavefunction import RealWavefunction
from services.noise_service import NoiseService
from services.observable_service import ObservableService
from services.state_service import StateService
from utils.errors import DimensionError

logger = logging.getLogger(__name__)


class RunService:
    """Turns a RunConfig into the state, observable and sensitivity profile it describes"""

    def __init__(self, state_service: StateService, observable_service: ObservableService,
                 noise_service: NoiseService):
        self.state_service = state_service
        self.observable_service = observable_service
        self.noise_service = noise_service

    def state(self, config: RunConfig) -> RealWavefunction:
        spec = config.state
        if spec.kind == 'file':
            state = self.state_service.load_state(spec.path, config.n)
        else:
            n = config.register_size()
            if spec.kind == 'gaussian':
                mu = spec.mu if spec.mu is not None else (2 ** n - 1) / 2.0
                sigma = spec.sigma if spec.sigma is not None else 2 ** n / 6.0
                state = self.state_service.gaussian(n, mu, sigma)
            elif spec.kind == 'random':
                state = self.state_service.random_state(n, spec.seed)
            else:
                state = self.state_service.basis_state(n, spec.index)
        logger.debug(f"Built state {state.label} on {state.n} qubits")
        return state

    def observable(self, config: RunConfig, n: Optional[int] = None) -> DiagonalObservable:
        spec = config.observable
        n = n if n is not None else config.register_size()
        if spec.kind == 'file':
            return self.observable_service.load_observable(spec.path, n)
        if spec.kind == 'identity':
            return self.observable_service.identity(n)
        return self.observable_service.phi_power(n, int(spec.power))

    def decomposition(self, config: RunConfig, n: Optional[int] = None) -> PauliDecomposition:
        return self.observable_service.decompose(self.observable(config, n))

    def profile(self, config: RunConfig) -> SensitivityProfile:
        """A given IR-first listing wins over computing gamma from state and observable"""
        if config.gammas_ir_first is not None:
            return SensitivityProfile.from_ir_first(config.gammas_ir_first, label="given")
        state = self.state(config)
        decomposition = self.decomposition(config, state.n)
        expectations = self.state_service.expectations(state)
        return self.noise_service.sensitivities(decomposition, expectations)

    def noise(self, config: RunConfig, n: int) -> Optional[NoiseVector]:
        if config.eta is None:
            return None
        eta = NoiseVector(config.eta)
        if eta.n != n:
            raise DimensionError(f"{eta.n} noise rates given for {n} qubits")
        return eta
