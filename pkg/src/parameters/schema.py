"""
JSON parameter documents: schema, loading and dumping.

    {"m": 2, "a": [[re, im], ...], "b": [[0, 0], [re, im], ...], "x": [re, im]}
"""

import json
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import jsonschema

from src.core import ParameterValidationError
from src.parameters.parameter_set import ParameterSet
from src.utils.json_utils import complex_to_pair, pair_to_complex

_COMPLEX = {
    "oneOf": [
        {"type": "number"},
        {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
    ]
}

PARAMETER_SCHEMA: Dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["m", "a", "b"],
    "properties": {
        "m": {"type": "integer", "minimum": 1},
        "a": {"type": "array", "items": _COMPLEX, "minItems": 2},
        "b": {"type": "array", "items": _COMPLEX, "minItems": 2},
        "x": _COMPLEX,
    },
    "additionalProperties": False,
}


def parse_parameters(document: Dict[str, Any]) -> Tuple[ParameterSet, Optional[complex]]:
    """Validate a decoded document and build the ParameterSet (and x if present)."""
    try:
        jsonschema.validate(instance=document, schema=PARAMETER_SCHEMA)
    except jsonschema.ValidationError as e:
        raise ParameterValidationError(f"parameter document rejected: {e.message}") from e

    m = document["m"]
    a = [pair_to_complex(v) for v in document["a"]]
    b = [pair_to_complex(v) for v in document["b"]]
    if len(a) != m + 1 or len(b) != m + 1:
        raise ParameterValidationError(
            f"parameter document rejected: 'a' and 'b' need {m + 1} entries, got {len(a)} and {len(b)}"
        )
    if b[0] != 0:
        raise ParameterValidationError(f"parameter document rejected: b[0] must be [0, 0], got {b[0]}")

    x = pair_to_complex(document["x"]) if "x" in document else None
    return ParameterSet(m=m, a=tuple(a), b=tuple(b)), x


def load_parameters(source: str) -> Tuple[ParameterSet, Optional[complex]]:
    """Load from inline JSON text or from a file path."""
    text = source.strip()
    if not text.startswith("{"):
        path = Path(source)
        if not path.is_file():
            raise ParameterValidationError(f"parameter file not found: {source}")
        text = path.read_text(encoding="utf-8")
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParameterValidationError(f"parameter document is not valid JSON: {e}") from e
    return parse_parameters(document)


def parameters_to_json(p: ParameterSet, x: Optional[complex] = None) -> Dict[str, Any]:
    """Inverse of parse_parameters."""
    document: Dict[str, Any] = {
        "m": p.m,
        "a": [complex_to_pair(v) for v in p.a],
        "b": [complex_to_pair(v) for v in p.b],
    }
    if x is not None:
        document["x"] = complex_to_pair(x)
    return document
