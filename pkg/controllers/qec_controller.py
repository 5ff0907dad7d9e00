import logging
import traceback
from typing import Optional, Tuple

from models.report import Report
from models.run_config import RunConfig
from models.surface_code import DistanceAssignment
from services.qec_service import QecService
from services.run_service import RunService
from utils.errors import HiqecError, InfeasibleError

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = [
    'eps_per_cycle', 'homogeneous_qubits', 'uniform_qubits', 'optimized_qubits',
    'reduction_uniform_pct', 'reduction_optimized_pct'
]


class QecController:
    """Controller for the surface-code resource commands"""

    def __init__(self, run_service: RunService, qec_service: QecService):
        self.run_service = run_service
        self.qec_service = qec_service

    def optimize(self, config: RunConfig) -> Tuple[Report, int]:
        """Homogeneous, equal-share and optimized distances with their totals"""
        try:
            profile = self.run_service.profile(config)
            params = config.code_params()
            optimized = self.qec_service.optimize_distances(profile, params)
            homogeneous = self.qec_service.homogeneous_distance(profile, params)
            try:
                uniform = self.qec_service.uniform_error_distances(profile, params)
            except InfeasibleError as e:
                logger.warning(f"Equal-share assignment infeasible: {e}")
                uniform = None

            schemes = [('homogeneous', homogeneous), ('uniform_error', uniform), ('optimized', optimized)]
            data = {
                'params': params.to_dict(),
                'gamma_ir_first': profile.ir_first(),
                'reduction_uniform_pct': self._reduction(uniform, homogeneous),
                'reduction_optimized_pct': self._reduction(optimized, homogeneous)
            }
            rows = []
            for name, assignment in schemes:
                data[name] = assignment.to_dict() if assignment else None
                rows.append([
                    name,
                    assignment.ir_first() if assignment else None,
                    assignment.total_physical if assignment else None,
                    assignment.achieved_error_per_cycle if assignment else None,
                    self._reduction(assignment, homogeneous)
                ])
            report = Report(
                command='optimize',
                data=data,
                columns=['scheme', 'd_ir_first', 'total_physical', 'achieved_error_per_cycle', 'reduction_pct'],
                rows=rows
            )
            return report, 0
        except HiqecError as e:
            logger.error(f"optimize error: {e}")
            logger.debug(traceback.format_exc())
            return Report.error('optimize', e.to_dict()), e.exit_code

    def sweep(self, config: RunConfig, eps_min: float = 1e-16, eps_max: float = 1e-3,
              points_per_decade: int = 4) -> Tuple[Report, int]:
        """Qubit totals and reductions over a log-spaced grid of per-cycle targets"""
        try:
            profile = self.run_service.profile(config)
            params = config.code_params()
            grid = self.qec_service.log_grid(eps_min, eps_max, points_per_decade)
            points = self.qec_service.reduction_sweep(profile, params, grid)
            documents = [point.to_dict() for point in points]
            rows = [[document[column] for column in SWEEP_COLUMNS] for document in documents]
            data = {
                'gamma_ir_first': profile.ir_first(),
                'p': params.p,
                'points': documents
            }
            return Report(command='sweep', data=data, columns=list(SWEEP_COLUMNS), rows=rows), 0
        except HiqecError as e:
            logger.error(f"sweep error: {e}")
            logger.debug(traceback.format_exc())
            return Report.error('sweep', e.to_dict()), e.exit_code

    @staticmethod
    def _reduction(assignment: Optional[DistanceAssignment], baseline: DistanceAssignment) -> Optional[float]:
        if assignment is None:
            return None
        return 100.0 * (1.0 - assignment.total_physical / baseline.total_physical)
