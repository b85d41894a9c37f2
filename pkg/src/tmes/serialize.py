"""JSON round-trip for states, single operators, and operator families.

Amplitudes and matrix entries are stored as [re, im] pairs.  Python float
repr round-trips IEEE doubles exactly, so save/load is bit-exact.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np

from .operators import OperatorSet
from .statevec import LocalOperator, PureState

FORMAT_VERSION = 1
CONVENTION = "q1-msb"


def _pairs(vec: np.ndarray) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in vec]


def _unpairs(pairs: Any) -> np.ndarray:
    return np.array([complex(re, im) for re, im in pairs], dtype=complex)


def _check_header(data: dict, kind: str) -> None:
    if not isinstance(data, dict):
        raise ValueError("expected a JSON object")
    if data.get("format_version") != FORMAT_VERSION:
        raise ValueError(
            f"unsupported format_version {data.get('format_version')!r}"
        )
    if data.get("kind") != kind:
        raise ValueError(f"expected kind {kind!r}, got {data.get('kind')!r}")


def state_to_dict(state: PureState) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "state",
        "convention": CONVENTION,
        "num_qubits": state.num_qubits,
        "amplitudes": _pairs(state.amplitudes),
    }


def state_from_dict(data: dict) -> PureState:
    _check_header(data, "state")
    if data.get("convention") != CONVENTION:
        raise ValueError(f"unsupported convention {data.get('convention')!r}")
    n = data["num_qubits"]
    amps = _unpairs(data["amplitudes"])
    if amps.shape != (2**n,):
        raise ValueError(
            f"state claims {n} qubits but carries {amps.shape[0]} amplitudes"
        )
    return PureState(n, amps)


def _matrix_to_rows(mat: np.ndarray) -> list[list[list[float]]]:
    return [_pairs(row) for row in mat]


def _matrix_from_rows(rows: Any, arity: int) -> np.ndarray:
    dim = 2**arity
    mat = np.array([_unpairs(row) for row in rows], dtype=complex)
    if mat.shape != (dim, dim):
        raise ValueError(
            f"operator of arity {arity} needs a {dim}x{dim} matrix, "
            f"got shape {mat.shape}"
        )
    return mat


def operator_to_dict(op: LocalOperator) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "operator",
        "arity": op.arity,
        "matrix": _matrix_to_rows(op.matrix),
    }


def operator_from_dict(data: dict) -> LocalOperator:
    _check_header(data, "operator")
    arity = data["arity"]
    return LocalOperator(arity, _matrix_from_rows(data["matrix"], arity))


def operator_set_to_dict(ops: OperatorSet) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "operator_set",
        "level": ops.level,
        "operators": [_matrix_to_rows(m.matrix) for m in ops.members],
    }


def operator_set_from_dict(data: dict) -> OperatorSet:
    _check_header(data, "operator_set")
    level = data["level"]
    members = tuple(
        LocalOperator(level, _matrix_from_rows(rows, level))
        for rows in data["operators"]
    )
    return OperatorSet(level, members)


def _save(data: dict, path: str | Path) -> None:
    Path(path).write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")


def _load(path: str | Path) -> dict:
    return json.loads(Path(path).read_text())


def save_state(state: PureState, path: str | Path) -> None:
    _save(state_to_dict(state), path)


def load_state(path: str | Path) -> PureState:
    return state_from_dict(_load(path))


def save_operator(op: LocalOperator, path: str | Path) -> None:
    _save(operator_to_dict(op), path)


def load_operator(path: str | Path) -> LocalOperator:
    return operator_from_dict(_load(path))


def save_operator_set(ops: OperatorSet, path: str | Path) -> None:
    _save(operator_set_to_dict(ops), path)


def load_operator_set(path: str | Path) -> OperatorSet:
    return operator_set_from_dict(_load(path))
