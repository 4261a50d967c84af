"""JSON schemas for POVMs and states.

Complex numbers are 2-element arrays [re, im]. A matrix is a row-major list
of rows of such pairs.

POVM:  {"dim": d, "effects": [matrix, ...]}
State: {"dim": d, "matrix": matrix}  or  {"dim": d, "vector": [[re, im], ...]}
"""

from __future__ import annotations

import json

import numpy as np

from .errors import ParseError
from .linalg import DensityMatrix, validate_density
from .povm import Povm, make_povm


def _decode_complex_matrix(obj, d: int, context: str) -> np.ndarray:
    try:
        arr = np.asarray(obj, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{context}: entries must be [re, im] pairs") from exc
    if arr.shape != (d, d, 2):
        raise ParseError(f"{context}: expected shape ({d}, {d}, 2), got {arr.shape}")
    return arr[..., 0] + 1j * arr[..., 1]


def _encode_complex_matrix(m: np.ndarray) -> list:
    m = np.asarray(m, dtype=complex)
    return np.stack([m.real, m.imag], axis=-1).tolist()


def povm_from_json(obj) -> Povm:
    """Build and validate a POVM from its JSON object form."""
    if not isinstance(obj, dict):
        raise ParseError("POVM document must be a JSON object")
    try:
        d = int(obj["dim"])
        raw_effects = obj["effects"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("POVM document needs integer 'dim' and a list 'effects'") from exc
    if not isinstance(raw_effects, list) or not raw_effects:
        raise ParseError("'effects' must be a non-empty list of matrices")
    effects = [
        _decode_complex_matrix(raw, d, f"effect {i}") for i, raw in enumerate(raw_effects)
    ]
    return make_povm(effects)


def povm_to_json(povm: Povm) -> dict:
    return {"dim": povm.dim, "effects": [_encode_complex_matrix(e) for e in povm.effects]}


def state_from_json(obj) -> DensityMatrix:
    """Build and validate a density matrix from its JSON object form."""
    if not isinstance(obj, dict):
        raise ParseError("state document must be a JSON object")
    try:
        d = int(obj["dim"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("state document needs an integer 'dim'") from exc
    if "matrix" in obj:
        return validate_density(_decode_complex_matrix(obj["matrix"], d, "state matrix"))
    if "vector" in obj:
        try:
            arr = np.asarray(obj["vector"], dtype=float)
        except (TypeError, ValueError) as exc:
            raise ParseError("state vector entries must be [re, im] pairs") from exc
        if arr.shape != (d, 2):
            raise ParseError(f"state vector: expected shape ({d}, 2), got {arr.shape}")
        psi = arr[:, 0] + 1j * arr[:, 1]
        return validate_density(np.outer(psi, psi.conj()))
    raise ParseError("state document needs a 'matrix' or 'vector' field")


def state_to_json(rho: DensityMatrix) -> dict:
    return {"dim": rho.dim, "matrix": _encode_complex_matrix(rho.matrix)}


def load_povm(path) -> Povm:
    with open(path, encoding="utf-8") as handle:
        return povm_from_json(json.load(handle))


def load_state(path) -> DensityMatrix:
    with open(path, encoding="utf-8") as handle:
        return state_from_json(json.load(handle))
