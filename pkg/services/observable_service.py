import logging
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from models.observable import DiagonalObservable, PauliDecomposition, SequencyRow
from models.wavefunction import ExpectationVector
from repositories.storage_interface import VectorRepositoryInterface
from utils.errors import DimensionError, ParameterError
from utils.walsh import WalshHadamard

logger = logging.getLogger(__name__)

# |beta_j| below this fraction of the largest coefficient counts as zero in reports
ZERO_BETA_RELATIVE = 1e-12


class ObservableService:
    """Diagonal observables, their O_j decompositions and the digitized field powers"""

    def __init__(self, vector_repository: Optional[VectorRepositoryInterface] = None):
        self.vector_repository = vector_repository

    def decompose(self, observable: DiagonalObservable) -> PauliDecomposition:
        """beta = 2^-n H diag"""
        beta = WalshHadamard.fwht(observable.diag) / observable.diag.size
        return PauliDecomposition(beta, label=observable.label)

    def recompose(self, decomposition: PauliDecomposition) -> DiagonalObservable:
        """diag = H beta"""
        return DiagonalObservable(WalshHadamard.fwht(decomposition.beta), label=decomposition.label)

    def identity(self, n: int) -> DiagonalObservable:
        n = WalshHadamard.check_qubits(n)
        return DiagonalObservable(np.ones(2 ** n), label="identity")

    def phi_power(self, n: int, p: int) -> DiagonalObservable:
        """phi^p with phi symmetrized on [-1, 1]: phi_l = (2^n - 1 - 2l) / (2^n - 1)"""
        n = WalshHadamard.check_qubits(n)
        self._check_power(p)
        top = 2 ** n - 1
        phi = (top - 2.0 * np.arange(2 ** n)) / top
        return DiagonalObservable(phi ** p, label=f"phi^{p}")

    def field_diagonal(self, n: int, start: float, stop: float) -> DiagonalObservable:
        """Field values evenly spaced from start (l = 0) to stop (l = 2^n - 1)"""
        n = WalshHadamard.check_qubits(n)
        if not (np.isfinite(start) and np.isfinite(stop)):
            raise ParameterError("Field window must be finite")
        return DiagonalObservable(np.linspace(start, stop, 2 ** n), label=f"field[{start:g}, {stop:g}]")

    def field_power(self, n: int, p: int, start: float, stop: float) -> DiagonalObservable:
        self._check_power(p)
        field = self.field_diagonal(n, start, stop)
        return DiagonalObservable(field.diag ** p, label=f"field[{start:g}, {stop:g}]^{p}")

    def load_observable(self, path: str, n: Optional[int] = None) -> DiagonalObservable:
        if self.vector_repository is None:
            raise ParameterError("No vector repository configured for file-backed observables")
        observable = DiagonalObservable(self.vector_repository.load_vector(path), label=f"file({path})")
        if n is not None and observable.n != n:
            raise DimensionError(f"Observable file {path} holds {observable.n} qubits but n = {n} was requested")
        return observable

    def expectation(self, decomposition: PauliDecomposition, expectations: ExpectationVector) -> float:
        """<O> = sum_j beta_j <O_j>"""
        self._check_same_register(decomposition, expectations)
        return float(np.dot(decomposition.beta, expectations.values))

    def sequency_report(self, decomposition: PauliDecomposition, include_zero: bool = False,
                        support: Optional[Iterable[int]] = None) -> List[SequencyRow]:
        """Rows (j, sequency, q_s, beta_j) ordered by sequency.

        Zero rows are dropped unless include_zero is set or j is listed in support.
        """
        n = decomposition.n
        beta = decomposition.beta
        nonzero = self._nonzero_mask(beta)
        keep = nonzero.copy() if not include_zero else np.ones(beta.size, dtype=bool)
        if support is not None:
            keep[list(support)] = True
        sequencies = WalshHadamard.sequency_array(n)
        rows = [
            SequencyRow(
                j=int(j),
                sequency=int(sequencies[j]),
                most_uv_qubit=WalshHadamard.most_uv_qubit(int(j), n),
                beta=float(beta[j]) if nonzero[j] else 0.0,
                pauli=WalshHadamard.pauli_string(int(j), n)
            )
            for j in np.flatnonzero(keep)
        ]
        rows.sort(key=lambda row: row.sequency)
        return rows

    def phi_parity_support(self, n: int, p: int) -> List[int]:
        """Indices whose Z-weight has the parity of p, where every phi power of that parity lives"""
        n = WalshHadamard.check_qubits(n)
        self._check_power(p)
        weights = WalshHadamard.bit_table(n).sum(axis=1)
        return np.flatnonzero(weights % 2 == p % 2).tolist()

    def phi_power_table(self, n: int, powers: Sequence[int]) -> Dict[str, object]:
        """beta_j for several powers of phi on the union of their supports, in index order"""
        if not powers:
            raise ParameterError("At least one power is required")
        decompositions = {p: self.decompose(self.phi_power(n, p)) for p in powers}
        support = np.zeros(2 ** n, dtype=bool)
        for decomposition in decompositions.values():
            support |= self._nonzero_mask(decomposition.beta)
        sequencies = WalshHadamard.sequency_array(n)
        rows = []
        for j in np.flatnonzero(support):
            j = int(j)
            rows.append({
                'j': j,
                'sequency': int(sequencies[j]),
                'q_s': WalshHadamard.most_uv_qubit(j, n),
                'pauli': WalshHadamard.pauli_string(j, n),
                'beta': {p: float(decompositions[p].beta[j]) for p in powers}
            })
        return {'n': n, 'powers': list(powers), 'rows': rows}

    @staticmethod
    def _nonzero_mask(beta: np.ndarray) -> np.ndarray:
        scale = float(np.max(np.abs(beta))) if beta.size else 0.0
        if scale == 0.0:
            return np.zeros(beta.size, dtype=bool)
        return np.abs(beta) > ZERO_BETA_RELATIVE * scale

    @staticmethod
    def _check_power(p: int) -> None:
        if isinstance(p, bool) or not isinstance(p, (int, np.integer)) or p < 1:
            raise ParameterError(f"Power must be a positive integer, got {p!r}")

    @staticmethod
    def _check_same_register(decomposition: PauliDecomposition, expectations: ExpectationVector) -> None:
        if decomposition.n != expectations.n:
            raise DimensionError(
                f"Observable acts on {decomposition.n} qubits but the state has {expectations.n}"
            )
