import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import List, Optional, Sequence

import numpy as np

from config import Config
from models.noise import SensitivityProfile
from models.surface_code import DistanceAssignment, SurfaceCodeParams, SweepPoint
from services.distance_optimizer import DistanceOptimizer
from utils.errors import InfeasibleError, ParameterError

logger = logging.getLogger(__name__)


class QecService:
    """Surface-code resource model: distance assignment per logical qubit"""

    def __init__(self, optimizer: Optional[DistanceOptimizer] = None, workers: int = Config.SWEEP_WORKERS):
        self.optimizer = optimizer or DistanceOptimizer()
        self.workers = max(1, int(workers))

    @staticmethod
    def logical_error_rate(d: int, params: SurfaceCodeParams) -> float:
        """P_L = c0 (p / p_th)^((d + 1) / 2) for odd d"""
        if isinstance(d, bool) or int(d) != d or d < 1 or d % 2 == 0:
            raise ParameterError(f"Code distance must be a positive odd integer, got {d!r}")
        return params.c0 * params.ratio ** ((int(d) + 1) // 2)

    def achieved_error(self, profile: SensitivityProfile, distances: Sequence[int],
                       params: SurfaceCodeParams) -> float:
        """sum_q |gamma_q| P_L(d_q), accumulated with fsum"""
        if len(distances) != profile.n:
            raise ParameterError(f"{len(distances)} distances given for {profile.n} logical qubits")
        return math.fsum(
            float(w) * self.logical_error_rate(d, params)
            for w, d in zip(profile.magnitudes(), distances)
        )

    def homogeneous_distance(self, profile: SensitivityProfile, params: SurfaceCodeParams) -> DistanceAssignment:
        """One d for every qubit, sized against the total weight sum |gamma_q|"""
        magnitudes = profile.magnitudes()
        budget = params.eps_per_cycle
        if profile.is_zero():
            return self._all_minimum(profile, params, "homogeneous")
        d = self._min_distance(math.fsum(magnitudes), budget, params, binding=self._binding_qubit(profile))
        # the closed form uses the total weight; the fsum of per-qubit terms can differ in the last ulp
        while self.achieved_error(profile, [d] * profile.n, params) > budget:
            if d + 2 > params.d_max:
                raise self._infeasible(profile, params)
            d += 2
        distances = [d] * profile.n
        logger.debug(f"Homogeneous distance {d} for target {budget:.3e}")
        return DistanceAssignment(distances, self.achieved_error(profile, distances, params), scheme="homogeneous")

    def uniform_error_distances(self, profile: SensitivityProfile, params: SurfaceCodeParams) -> DistanceAssignment:
        """Each qubit gets an equal share eps / n of the budget"""
        magnitudes = profile.magnitudes()
        budget = params.eps_per_cycle
        share = budget / profile.n
        distances = []
        binding = self._binding_qubit(profile)
        try:
            for q, weight in enumerate(magnitudes):
                if weight == 0.0:
                    distances.append(params.d_min)
                else:
                    distances.append(self._min_distance(float(weight), share, params, binding=q))
        except InfeasibleError as e:
            # equal shares fail first on the largest weight
            raise InfeasibleError(
                f"Equal-share target {share:.3e} is out of reach for qubit {binding}", binding_qubit=binding
            ) from e
        achieved = self.achieved_error(profile, distances, params)
        if achieved > budget:
            raise InfeasibleError(
                f"Equal-share distances give {achieved:.3e} above the target {budget:.3e}",
                binding_qubit=binding
            )
        return DistanceAssignment(distances, achieved, scheme="uniform_error")

    def optimize_distances(self, profile: SensitivityProfile, params: SurfaceCodeParams) -> DistanceAssignment:
        """Minimum total sum d_q^2 meeting the per-cycle target"""
        if profile.is_zero():
            return self._all_minimum(profile, params, "optimized")
        incumbents = []
        for scheme in (self.homogeneous_distance, self.uniform_error_distances):
            try:
                incumbents.append(scheme(profile, params).distances)
            except InfeasibleError:
                pass
        try:
            distances, achieved = self.optimizer.optimize(profile.magnitudes(), params, incumbents)
        except InfeasibleError as e:
            raise self._infeasible(profile, params) from e
        return DistanceAssignment(distances, achieved, scheme="optimized")

    def brute_force_distances(self, profile: SensitivityProfile, params: SurfaceCodeParams) -> DistanceAssignment:
        """Exhaustive reference over every odd tuple in [d_min, d_max]^n"""
        result = self.optimizer.brute_force(profile.magnitudes(), params)
        if result is None:
            raise self._infeasible(profile, params)
        distances, achieved = result
        return DistanceAssignment(distances, achieved, scheme="brute_force")

    def reduction_sweep(self, profile: SensitivityProfile, params: SurfaceCodeParams,
                        eps_grid: Sequence[float]) -> List[SweepPoint]:
        """Totals of the three schemes and their reductions at each per-cycle target"""
        targets = [float(eps) for eps in eps_grid]
        for eps in targets:
            if not 0.0 < eps < 1.0:
                raise ParameterError(f"Per-cycle targets must lie in (0, 1), got {eps}")

        if self.workers > 1 and len(targets) > 1:
            # the optimizer keeps its incumbent on the instance, so every thread gets its own service
            with ThreadPoolExecutor(max_workers=self.workers) as executor:
                return list(executor.map(
                    lambda eps: QecService(workers=1)._sweep_point(profile, params, eps), targets
                ))
        points = [self._sweep_point(profile, params, eps) for eps in targets]
        logger.debug(f"Swept {len(points)} targets")
        return points

    def _sweep_point(self, profile: SensitivityProfile, params: SurfaceCodeParams, eps: float) -> SweepPoint:
        point_params = replace(params, n_cycles=1, epsilon=eps)
        return SweepPoint(
            eps_per_cycle=eps,
            homogeneous_qubits=self._total_or_none(self.homogeneous_distance, profile, point_params),
            uniform_qubits=self._total_or_none(self.uniform_error_distances, profile, point_params),
            optimized_qubits=self._total_or_none(self.optimize_distances, profile, point_params)
        )

    @staticmethod
    def log_grid(eps_min: float, eps_max: float, points_per_decade: int) -> List[float]:
        """Log-spaced targets from eps_min to eps_max, both endpoints included"""
        if not 0.0 < eps_min <= eps_max < 1.0:
            raise ParameterError(f"Sweep range must satisfy 0 < eps_min <= eps_max < 1, got [{eps_min}, {eps_max}]")
        if int(points_per_decade) != points_per_decade or points_per_decade < 1:
            raise ParameterError(f"Points per decade must be a positive integer, got {points_per_decade}")
        decades = math.log10(eps_max) - math.log10(eps_min)
        count = int(round(decades * points_per_decade)) + 1
        if count == 1:
            return [float(eps_min)]
        return np.logspace(math.log10(eps_min), math.log10(eps_max), count).tolist()

    def _min_distance(self, weight: float, budget: float, params: SurfaceCodeParams, binding: int) -> int:
        """Smallest odd d in range with weight * P_L(d) <= budget"""
        ratio = params.ratio
        if weight * self.logical_error_rate(params.d_min, params) <= budget:
            return params.d_min
        quotient = budget / (params.c0 * weight)
        if not math.isfinite(quotient):
            return params.d_min
        steps = math.ceil(math.log(quotient) / math.log(ratio))
        d = max(2 * steps - 1, params.d_min)
        if d % 2 == 0:
            d += 1
        # correct the closed form against rounding in the logarithms
        while d - 2 >= params.d_min and weight * self.logical_error_rate(d - 2, params) <= budget:
            d -= 2
        while weight * self.logical_error_rate(d, params) > budget:
            d += 2
            if d > params.d_max:
                break
        if d > params.d_max:
            raise InfeasibleError(
                f"Qubit {binding} needs d > {params.d_max} to reach {budget:.3e} per cycle",
                binding_qubit=binding
            )
        return d

    def _all_minimum(self, profile: SensitivityProfile, params: SurfaceCodeParams, scheme: str) -> DistanceAssignment:
        logger.warning("Sensitivity profile is identically zero; every qubit gets the minimum distance")
        distances = [params.d_min] * profile.n
        return DistanceAssignment(distances, 0.0, scheme=scheme)

    @staticmethod
    def _binding_qubit(profile: SensitivityProfile) -> int:
        magnitudes = profile.magnitudes()
        return max(range(profile.n), key=lambda q: (magnitudes[q], q))

    def _infeasible(self, profile: SensitivityProfile, params: SurfaceCodeParams) -> InfeasibleError:
        binding = self._binding_qubit(profile)
        worst = self.achieved_error(profile, [params.d_max] * profile.n, params)
        return InfeasibleError(
            f"Target {params.eps_per_cycle:.3e} per cycle is out of reach: d = {params.d_max} everywhere "
            f"gives {worst:.3e}; qubit {binding} binds",
            binding_qubit=binding
        )

    @staticmethod
    def _total_or_none(scheme, profile: SensitivityProfile, params: SurfaceCodeParams) -> Optional[int]:
        try:
            return scheme(profile, params).total_physical
        except InfeasibleError as e:
            logger.info(f"Infeasible at {params.eps_per_cycle:.3e}: {e}")
            return None
