"""
JSON encoding helpers for complex scalars and matrices.
"""

import json
from typing import Any, List, Sequence, Union

import numpy as np

Number = Union[int, float, complex]


def complex_to_pair(value: Number) -> List[float]:
    """Complex value as [re, im]."""
    value = complex(value)
    return [float(value.real), float(value.imag)]


def pair_to_complex(value: Union[Number, Sequence[float]]) -> complex:
    """Accept a plain number or an [re, im] pair."""
    if isinstance(value, (int, float, complex)):
        return complex(value)
    re, im = value
    return complex(float(re), float(im))


def matrix_to_pairs(matrix: np.ndarray) -> List[List[List[float]]]:
    """Complex matrix as nested rows of [re, im] pairs."""
    return [[complex_to_pair(v) for v in row] for row in np.asarray(matrix)]


def to_jsonable(data: Any) -> Any:
    """Recursively convert complex values, numpy scalars and arrays."""
    if isinstance(data, dict):
        return {str(k): to_jsonable(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [to_jsonable(v) for v in data]
    if isinstance(data, np.ndarray):
        return to_jsonable(data.tolist())
    if isinstance(data, (complex, np.complexfloating)):
        return complex_to_pair(data)
    if isinstance(data, np.bool_):
        return bool(data)
    if isinstance(data, np.integer):
        return int(data)
    if isinstance(data, np.floating):
        return float(data)
    return data


def dumps(data: Any) -> str:
    """Deterministic JSON text (shortest round-trip floats, no NaN/Inf)."""
    return json.dumps(to_jsonable(data), indent=2, allow_nan=False)
