import numpy as np

from utils.errors import DimensionError


def frozen_vector(values) -> np.ndarray:
    """Copy into a read-only 1-D float array"""
    array = np.array(values, dtype=float)
    if array.ndim != 1:
        raise DimensionError(f"Expected a 1-D vector, got shape {array.shape}")
    array.setflags(write=False)
    return array
