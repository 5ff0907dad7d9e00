import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from models.surface_code import SurfaceCodeParams
from utils.errors import InfeasibleError, ResourceError

logger = logging.getLogger(__name__)

# pruning slack on float partial sums; candidates are re-checked exactly with fsum
PRUNE_SLACK = 1e-9
BRUTE_FORCE_MAX_QUBITS = 6


class DistanceOptimizer:
    """Branch and bound for min sum d_q^2 s.t. sum_q w_q P_L(d_q) <= budget over odd d_q.

    Exchange argument: swapping distances between qubits with w_a >= w_b and
    d_a < d_b never raises the error at equal cost, so the search only visits
    distance sequences that are nonincreasing in the order of decreasing w.
    """

    def __init__(self):
        self.best_key = None
        self.best_distances = None
        self.nodes = 0

    @staticmethod
    def rate_table(params: SurfaceCodeParams) -> Tuple[List[int], List[float]]:
        levels = params.distances()
        rates = [params.c0 * params.ratio ** ((d + 1) // 2) for d in levels]
        return levels, rates

    @staticmethod
    def error_of(weights: Sequence[float], distances: Sequence[int], params: SurfaceCodeParams) -> float:
        return math.fsum(w * (params.c0 * params.ratio ** ((int(d) + 1) // 2)) for w, d in zip(weights, distances))

    def optimize(self, weights: Sequence[float], params: SurfaceCodeParams,
                 incumbents: Sequence[Sequence[int]] = ()) -> Tuple[Tuple[int, ...], float]:
        """Return (distances qubit 0 first, achieved per-cycle error)"""
        weights = [float(w) for w in weights]
        n = len(weights)
        budget = params.eps_per_cycle
        levels, rates = self.rate_table(params)

        worst = self.error_of(weights, [params.d_max] * n, params)
        if worst > budget:
            binding = max(range(n), key=lambda q: (weights[q], q))
            raise InfeasibleError(
                f"Target {budget:.3e} per cycle is out of reach even at d = {params.d_max} everywhere "
                f"(error {worst:.3e}); qubit {binding} binds",
                binding_qubit=binding
            )

        order = sorted(range(n), key=lambda q: (-weights[q], -q))
        sorted_weights = [weights[q] for q in order]
        suffix = [math.fsum(sorted_weights[i:]) for i in range(n + 1)]

        self.best_key = None
        self.best_distances = None
        self.nodes = 0
        for candidate in incumbents:
            self._offer(list(candidate), weights, params, budget)

        chosen = [0] * n
        d_min_sq = params.d_min ** 2

        def search(i: int, cap: int, cost: int, error: float) -> None:
            self.nodes += 1
            if i == n:
                distances = [0] * n
                for k, q in enumerate(order):
                    distances[q] = levels[chosen[k]]
                self._offer(distances, weights, params, budget)
                return
            remaining_after = n - i - 1
            w = sorted_weights[i]
            for level in range(cap + 1):
                if error + suffix[i] * rates[level] > budget * (1.0 + PRUNE_SLACK):
                    continue
                d = levels[level]
                bound = cost + d * d + remaining_after * d_min_sq
                if self.best_key is not None and bound > self.best_key[0]:
                    break
                chosen[i] = level
                search(i + 1, level, cost + d * d, error + w * rates[level])
                if w == 0.0:
                    break

        search(0, len(levels) - 1, 0, 0.0)
        logger.debug(f"Distance search visited {self.nodes} nodes")
        if self.best_distances is None:
            raise InfeasibleError(f"No distance assignment meets {budget:.3e} per cycle")
        return tuple(self.best_distances), self.best_key[1]

    def _offer(self, distances: List[int], weights: Sequence[float], params: SurfaceCodeParams,
               budget: float) -> None:
        distances = self.canonical(distances, weights)
        error = self.error_of(weights, distances, params)
        if error > budget:
            return
        key = (sum(d * d for d in distances), error, tuple(distances[::-1]))
        if self.best_key is None or key < self.best_key:
            self.best_key = key
            self.best_distances = distances

    @staticmethod
    def canonical(distances: Sequence[int], weights: Sequence[float]) -> List[int]:
        """Within groups of equal weight give the smallest distances to the highest qubit indices"""
        distances = list(distances)
        groups = {}
        for q, w in enumerate(weights):
            groups.setdefault(w, []).append(q)
        for qubits in groups.values():
            if len(qubits) > 1:
                values = sorted(distances[q] for q in qubits)
                for q, d in zip(sorted(qubits, reverse=True), values):
                    distances[q] = d
        return distances

    @staticmethod
    def brute_force(weights: Sequence[float], params: SurfaceCodeParams) -> Optional[Tuple[Tuple[int, ...], float]]:
        """Exhaustive search over every odd tuple; None when nothing is feasible"""
        n = len(weights)
        if n > BRUTE_FORCE_MAX_QUBITS:
            raise ResourceError(f"Exhaustive distance search is limited to {BRUTE_FORCE_MAX_QUBITS} qubits")
        levels, rates = DistanceOptimizer.rate_table(params)
        levels = np.array(levels)
        rates = np.array(rates)
        grids = np.meshgrid(*([np.arange(levels.size)] * n), indexing='ij')
        index = np.stack([g.reshape(-1) for g in grids], axis=1)
        errors = rates[index] @ np.asarray(weights, dtype=float)
        costs = (levels[index] ** 2).sum(axis=1)
        feasible = errors <= params.eps_per_cycle
        if not feasible.any():
            return None
        best_cost = costs[feasible].min()
        candidates = np.flatnonzero(feasible & (costs == best_cost))
        best = min(
            candidates,
            key=lambda row: (DistanceOptimizer.error_of(weights, levels[index[row]], params),
                             tuple(levels[index[row]][::-1]))
        )
        distances = tuple(int(d) for d in levels[index[best]])
        return distances, DistanceOptimizer.error_of(weights, distances, params)
