import logging
import traceback
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config import Config
from models.noise import NoiseVector
from models.observable import DiagonalObservable
from models.report import Report
from models.run_config import RunConfig
from services.kraus_oracle import KrausOracle
from services.noise_service import NoiseService
from services.observable_service import ObservableService
from services.run_service import RunService
from services.state_service import StateService
from utils.errors import FitError, HiqecError, ParameterError, ResourceError, ToleranceError
from utils.walsh import WalshHadamard

logger = logging.getLogger(__name__)

CommandResult = Tuple[Report, int]


class AnalysisController:
    """Controller for the state, observable and noise commands"""

    def __init__(self, run_service: RunService, state_service: StateService,
                 observable_service: ObservableService, noise_service: NoiseService,
                 kraus_oracle: KrausOracle):
        self.run_service = run_service
        self.state_service = state_service
        self.observable_service = observable_service
        self.noise_service = noise_service
        self.kraus_oracle = kraus_oracle

    def _failed(self, command: str, error: HiqecError) -> CommandResult:
        logger.error(f"{command} error: {error}")
        logger.debug(traceback.format_exc())
        return Report.error(command, error.to_dict()), error.exit_code

    def expectations(self, config: RunConfig, sort_magnitude: bool = False) -> CommandResult:
        """<O_j> table with sequency and most-UV qubit columns"""
        try:
            state = self.run_service.state(config)
            expectations = self.state_service.expectations(state)
            n = state.n
            order = expectations.sorted_by_magnitude() if sort_magnitude else range(2 ** n)
            sequencies = WalshHadamard.sequency_array(n)
            rows = [
                [j, int(sequencies[j]), WalshHadamard.most_uv_qubit(j, n), expectations[j]]
                for j in order
            ]
            report = Report(
                command='expectations',
                data={
                    'n': n,
                    'state': state.label,
                    'sorted_by_magnitude': sort_magnitude,
                    'rows': [
                        {'j': j, 'sequency': s, 'q_s': q_s, 'expectation': value}
                        for j, s, q_s, value in rows
                    ]
                },
                columns=['j', 'sequency', 'q_s', 'expectation'],
                rows=rows
            )
            return report, 0
        except HiqecError as e:
            return self._failed('expectations', e)

    def gammas(self, config: RunConfig) -> CommandResult:
        """Sensitivities in both orders plus the exponential decay fit"""
        try:
            profile = self.run_service.profile(config)
            try:
                fit = self.noise_service.decay_fit(profile)
            except FitError as e:
                logger.info(f"Decay length undefined: {e}")
                fit = None
            data = profile.to_dict()
            data['xi'] = fit.xi if fit else None
            data['fit_quality'] = fit.quality if fit else None
            rows = [[q, profile.n - 1 - q, float(profile.gamma[q])] for q in range(profile.n)]
            report = Report(command='gammas', data=data, columns=['q', 'k_ir', 'gamma'], rows=rows)
            return report, 0
        except HiqecError as e:
            return self._failed('gammas', e)

    def decompose(self, config: RunConfig, include_zero: bool = False,
                  powers: Optional[Sequence[int]] = None) -> CommandResult:
        """beta_j by sequency, or a multi-power table of phi^p"""
        try:
            if powers:
                if config.observable.kind != 'phi_power':
                    raise ParameterError("--powers only applies to the phi_power observable")
                table = self.observable_service.phi_power_table(config.register_size(), list(powers))
                columns = ['j', 'sequency', 'q_s', 'pauli'] + [f"beta_p{p}" for p in table['powers']]
                rows = [
                    [row['j'], row['sequency'], row['q_s'], row['pauli']] + [row['beta'][p] for p in table['powers']]
                    for row in table['rows']
                ]
                data = {
                    'n': table['n'],
                    'powers': table['powers'],
                    'rows': [dict(zip(columns, row)) for row in rows]
                }
                return Report(command='decompose', data=data, columns=columns, rows=rows), 0

            observable = self.run_service.observable(config)
            decomposition = self.observable_service.decompose(observable)
            support = None
            if config.observable.kind == 'phi_power':
                support = self.observable_service.phi_parity_support(decomposition.n, int(config.observable.power))
            sequency_rows = self.observable_service.sequency_report(
                decomposition, include_zero=include_zero, support=support
            )
            columns = ['j', 'sequency', 'q_s', 'pauli', 'beta']
            rows = [[r.j, r.sequency, r.most_uv_qubit, r.pauli, r.beta] for r in sequency_rows]
            data = {
                'n': decomposition.n,
                'observable': observable.label,
                'rows': [r.to_dict() for r in sequency_rows]
            }
            return Report(command='decompose', data=data, columns=columns, rows=rows), 0
        except HiqecError as e:
            return self._failed('decompose', e)

    def polynomial(self, config: RunConfig, indices: Sequence[int] = (),
                   observable_total: bool = False) -> CommandResult:
        """Noise polynomials of chosen <O_j>, or of the whole observable"""
        try:
            state = self.run_service.state(config)
            expectations = self.state_service.expectations(state)
            polynomials = []
            if observable_total:
                decomposition = self.run_service.decomposition(config, state.n)
                polynomials.append(('total', self.noise_service.observable_polynomial(decomposition, expectations)))
            if not indices and not observable_total:
                raise ParameterError("Pass --j for at least one basis index or --observable-total")
            for j in indices:
                j = WalshHadamard.check_index(j, state.n)
                polynomials.append((j, self.noise_service.noise_polynomial(j, expectations)))

            rows = []
            documents = []
            for key, polynomial in polynomials:
                document = polynomial.to_dict()
                document['j'] = key
                document['expression'] = str(polynomial)
                documents.append(document)
                for term in document['terms']:
                    rows.append([key, ' '.join(str(q) for q in term['qubits']), term['coefficient']])
            data = {'n': state.n, 'state': state.label, 'polynomials': documents}
            report = Report(command='polynomial', data=data, columns=['j', 'qubits', 'coefficient'], rows=rows)
            return report, 0
        except HiqecError as e:
            return self._failed('polynomial', e)

    def verify(self, config: RunConfig, trials: int = 50, seed: Optional[int] = None) -> CommandResult:
        """Density-matrix oracle against the product formula on the instance and random triples"""
        try:
            state = self.run_service.state(config)
            n = state.n
            if n > Config.VERIFY_MAX_QUBITS:
                raise ResourceError(f"verify is limited to {Config.VERIFY_MAX_QUBITS} qubits, got {n}")
            if trials < 0:
                raise ParameterError(f"--trials must be non-negative, got {trials}")
            rng = np.random.default_rng(seed)
            observable = self.run_service.observable(config, n)
            eta = self.run_service.noise(config, n)
            if eta is None:
                eta = NoiseVector(rng.random(n))

            analytic, oracle = self._compare(state, observable, eta)
            deviations = [abs(analytic - oracle)]
            for _ in range(trials):
                trial_state = self.state_service.from_amplitudes(self._unit(rng.standard_normal(2 ** n)))
                trial_observable = DiagonalObservable(rng.standard_normal(2 ** n))
                trial_eta = NoiseVector(rng.random(n))
                trial_analytic, trial_oracle = self._compare(trial_state, trial_observable, trial_eta)
                deviations.append(abs(trial_analytic - trial_oracle))

            max_deviation = float(max(deviations))
            passed = max_deviation <= Config.VERIFY_TOLERANCE
            data = {
                'n': n,
                'trials': trials,
                'eta': eta.eta.tolist(),
                'analytic': analytic,
                'oracle': oracle,
                'max_deviation': max_deviation,
                'tolerance': Config.VERIFY_TOLERANCE,
                'passed': passed
            }
            report = Report(
                command='verify',
                data=data,
                columns=['trials', 'max_deviation', 'tolerance', 'passed'],
                rows=[[trials, max_deviation, Config.VERIFY_TOLERANCE, passed]]
            )
            if not passed:
                error = ToleranceError(
                    f"Oracle and product formula differ by {max_deviation:.3e} > {Config.VERIFY_TOLERANCE:.0e}"
                )
                logger.error(f"verify error: {error}")
                return report, error.exit_code
            return report, 0
        except HiqecError as e:
            return self._failed('verify', e)

    def profiles(self, config: RunConfig, sigmas: Sequence[float], seed: Optional[int] = None) -> CommandResult:
        """Sensitivity profiles over a family of Gaussian widths plus one random state"""
        try:
            n = config.register_size()
            if not sigmas:
                raise ParameterError("--sigmas needs at least one width")
            mu = config.state.mu if config.state.mu is not None else (2 ** n - 1) / 2.0
            states = [self.state_service.gaussian(n, mu, sigma) for sigma in sigmas]
            states.append(self.state_service.random_state(n, seed))
            decomposition = self.run_service.decomposition(config, n)
            results = self.noise_service.sensitivity_sweep(states, decomposition)

            documents = []
            rows = []
            for profile, fit in results:
                document = profile.to_dict()
                document['label'] = profile.label
                document['xi'] = fit.xi if fit else None
                document['fit_quality'] = fit.quality if fit else None
                documents.append(document)
                rows.append([profile.label, document['xi'], document['fit_quality'],
                             profile.expectation_noiseless, profile.ir_first()])
            data = {'n': n, 'profiles': documents}
            report = Report(
                command='profiles',
                data=data,
                columns=['state', 'xi', 'fit_quality', 'expectation_noiseless', 'gamma_ir_first'],
                rows=rows
            )
            return report, 0
        except HiqecError as e:
            return self._failed('profiles', e)

    def layout(self, config: RunConfig, device_eta: Sequence[float]) -> CommandResult:
        """Most sensitive logical qubit on the most reliable device"""
        try:
            profile = self.run_service.profile(config)
            placement = self.noise_service.best_layout(profile, device_eta)
            data = placement.to_dict()
            data['gamma_uv_first'] = profile.uv_first()
            data['device_eta'] = [float(value) for value in device_eta]
            rows = [
                [q, device, float(profile.gamma[q]), float(device_eta[device])]
                for q, device in enumerate(placement.device_for_qubit)
            ]
            report = Report(command='layout', data=data, columns=['q', 'device', 'gamma', 'device_eta'], rows=rows)
            return report, 0
        except HiqecError as e:
            return self._failed('layout', e)

    def _compare(self, state, observable: DiagonalObservable, eta: NoiseVector) -> List[float]:
        decomposition = self.observable_service.decompose(observable)
        expectations = self.state_service.expectations(state)
        analytic = self.noise_service.noisy_expectation(decomposition, expectations, eta)
        oracle = self.kraus_oracle.kraus_oracle(state, observable, eta)
        return [analytic, oracle]

    @staticmethod
    def _unit(values: np.ndarray) -> np.ndarray:
        return values / np.linalg.norm(values)
