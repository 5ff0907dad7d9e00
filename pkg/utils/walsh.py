from typing import Optional

import numpy as np

from config import Config
from utils.errors import DimensionError


class WalshHadamard:
    """Natural-ordered Walsh-Hadamard transform and the bitmask <-> Pauli-Z string map.

    Bit b of a basis index j is a Pauli-Z on qubit b. Qubit 0 is the least
    significant bit (most UV), qubit n-1 the most significant (IR).
    """

    @staticmethod
    def qubit_count(length: int) -> int:
        """Return n for a vector of length 2^n, validating the register size"""
        if length < 2 or length & (length - 1):
            raise DimensionError(f"Length must be a power of two >= 2, got {length}")
        n = length.bit_length() - 1
        if n > Config.MAX_QUBITS:
            raise DimensionError(f"n = {n} exceeds the configured cap of {Config.MAX_QUBITS} qubits")
        return n

    @staticmethod
    def check_qubits(n: int) -> int:
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise DimensionError(f"Qubit count must be a positive integer, got {n!r}")
        if n > Config.MAX_QUBITS:
            raise DimensionError(f"n = {n} exceeds the configured cap of {Config.MAX_QUBITS} qubits")
        return int(n)

    @staticmethod
    def check_index(j: int, n: int) -> int:
        WalshHadamard.check_qubits(n)
        if not isinstance(j, (int, np.integer)) or not 0 <= j < 2 ** n:
            raise DimensionError(f"Basis index must lie in [0, {2 ** n}), got {j!r}")
        return int(j)

    @staticmethod
    def fwht(v) -> np.ndarray:
        """Unnormalized ±1 transform along the last axis, O(2^n n) butterflies.

        Returns H v with H[j, l] = (-1)^popcount(j & l); H H = 2^n I.
        """
        x = np.array(v, dtype=float)
        length = x.shape[-1] if x.ndim else 0
        WalshHadamard.qubit_count(length)
        lead = x.shape[:-1]
        h = 1
        while h < length:
            x = x.reshape(*lead, -1, 2, h)
            a = x[..., 0, :]
            b = x[..., 1, :]
            x = np.stack((a + b, a - b), axis=-2)
            h *= 2
        return x.reshape(*lead, length)

    @staticmethod
    def walsh_matrix(n: int) -> np.ndarray:
        """Dense transform matrix; row j is the diagonal of O_j"""
        n = WalshHadamard.check_qubits(n)
        return WalshHadamard.fwht(np.eye(2 ** n))

    @staticmethod
    def sequency(j: int, n: int) -> int:
        """Sign changes along row j: inverse Gray code of the n-bit reversal of j"""
        j = WalshHadamard.check_index(j, n)
        reversed_bits = int(format(j, f'0{n}b')[::-1], 2)
        s = reversed_bits
        shift = reversed_bits >> 1
        while shift:
            s ^= shift
            shift >>= 1
        return s

    @staticmethod
    def sequency_array(n: int) -> np.ndarray:
        n = WalshHadamard.check_qubits(n)
        j = np.arange(2 ** n, dtype=np.int64)
        reversed_bits = np.zeros_like(j)
        for b in range(n):
            reversed_bits |= ((j >> b) & 1) << (n - 1 - b)
        s = reversed_bits.copy()
        shift = reversed_bits >> 1
        while shift.any():
            s ^= shift
            shift >>= 1
        return s

    @staticmethod
    def most_uv_qubit(j: int, n: int) -> Optional[int]:
        """Least-significant active qubit of j; None for the identity"""
        j = WalshHadamard.check_index(j, n)
        if j == 0:
            return None
        return (j & -j).bit_length() - 1

    @staticmethod
    def most_uv_array(n: int) -> np.ndarray:
        """Vectorized most_uv_qubit with -1 standing in for j = 0"""
        n = WalshHadamard.check_qubits(n)
        j = np.arange(2 ** n, dtype=np.int64)
        lowest = j & -j
        out = np.full(j.shape, -1, dtype=np.int64)
        nonzero = lowest > 0
        out[nonzero] = np.log2(lowest[nonzero]).astype(np.int64)
        return out

    @staticmethod
    def pauli_string(j: int, n: int) -> str:
        """I/Z label with qubit n-1 leftmost"""
        j = WalshHadamard.check_index(j, n)
        return ''.join('Z' if (j >> b) & 1 else 'I' for b in reversed(range(n)))

    @staticmethod
    def active_qubits(j: int, n: int) -> tuple:
        j = WalshHadamard.check_index(j, n)
        return tuple(b for b in range(n) if (j >> b) & 1)

    @staticmethod
    def bit_table(n: int) -> np.ndarray:
        """Boolean (2^n, n) table; entry [j, q] is j_q"""
        n = WalshHadamard.check_qubits(n)
        j = np.arange(2 ** n, dtype=np.int64)
        return ((j[:, None] >> np.arange(n)) & 1).astype(bool)


# Convenience functions
def fwht(v) -> np.ndarray:
    return WalshHadamard.fwht(v)


def sequency(j: int, n: int) -> int:
    return WalshHadamard.sequency(j, n)


def most_uv_qubit(j: int, n: int) -> Optional[int]:
    return WalshHadamard.most_uv_qubit(j, n)


def pauli_string(j: int, n: int) -> str:
    return WalshHadamard.pauli_string(j, n)
