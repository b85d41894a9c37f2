"""Named unitaries, the 16-element two-qubit gamma table, and the
block-recursive family construction with independence certification.

Block convention: in a 2x2 block layout [[A, B], [C, D]] the first qubit an
operator is applied to selects the block row, so for the CNOT below the
first target is the control.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

import numpy as np

from .statevec import ATOL, LocalOperator, PureState, apply_local, overlap

_S0 = np.eye(2, dtype=complex)
_S1 = np.array([[0, 1], [1, 0]], dtype=complex)
_S2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
_S3 = np.array([[1, 0], [0, -1]], dtype=complex)
_SIGMA = (_S0, _S1, _S2, _S3)
_ZERO2 = np.zeros((2, 2), dtype=complex)


def sigma(index: int) -> LocalOperator:
    """Pauli matrix sigma_index for index in 0..3 (0 is the identity)."""
    if index not in (0, 1, 2, 3):
        raise ValueError(f"Pauli index must be 0..3, got {index}")
    return LocalOperator(1, _SIGMA[index])


def cnot() -> LocalOperator:
    """Controlled-NOT [[s0, 0], [0, s1]]; first target is the control."""
    return LocalOperator(2, np.block([[_S0, _ZERO2], [_ZERO2, _S1]]))


def u_y() -> LocalOperator:
    """Controlled-sigma_2 gate [[s0, 0], [0, s2]]."""
    return LocalOperator(2, np.block([[_S0, _ZERO2], [_ZERO2, _S2]]))


def u_z() -> LocalOperator:
    """Controlled-sigma_3 gate [[s0, 0], [0, s3]]."""
    return LocalOperator(2, np.block([[_S0, _ZERO2], [_ZERO2, _S3]]))


def u_chi() -> LocalOperator:
    """Generator of the chi-class resources: (1/sqrt2) [[s3, s1], [i s2, s0]]."""
    return LocalOperator(
        2, np.block([[_S3, _S1], [1j * _S2, _S0]]) / math.sqrt(2.0)
    )


def u_w2() -> LocalOperator:
    """Printed two-qubit matrix associated with the W-class target state."""
    r = 1.0 / math.sqrt(2.0)
    mat = np.array(
        [
            [0, r, r, 0],
            [0, 0, 0, 1],
            [1, 0, 0, 0],
            [0, r, -r, 0],
        ],
        dtype=complex,
    )
    return LocalOperator(2, mat)


# The gamma table, verbatim: four diagonal members, four diagonal members
# with the lower block negated, then the same two families on the
# antidiagonal.  Entries are (antidiagonal?, upper sigma, lower sigma, sign).
_GAMMA_LAYOUT: tuple[tuple[bool, int, int, float], ...] = (
    (False, 0, 1, 1.0),
    (False, 1, 2, 1.0),
    (False, 2, 3, 1.0),
    (False, 3, 0, 1.0),
    (False, 0, 1, -1.0),
    (False, 1, 2, -1.0),
    (False, 2, 3, -1.0),
    (False, 3, 0, -1.0),
    (True, 0, 1, 1.0),
    (True, 1, 2, 1.0),
    (True, 2, 3, 1.0),
    (True, 3, 0, 1.0),
    (True, 0, 1, -1.0),
    (True, 1, 2, -1.0),
    (True, 2, 3, -1.0),
    (True, 3, 0, -1.0),
)


def gamma(index: int) -> LocalOperator:
    """Member ``index`` (1..16) of the two-qubit gamma table."""
    if not 1 <= index <= 16:
        raise ValueError(f"gamma index must be 1..16, got {index}")
    anti, a, b, sign = _GAMMA_LAYOUT[index - 1]
    upper, lower = _SIGMA[a], sign * _SIGMA[b]
    if anti:
        mat = np.block([[_ZERO2, upper], [lower, _ZERO2]])
    else:
        mat = np.block([[upper, _ZERO2], [_ZERO2, lower]])
    return LocalOperator(2, mat)


_NAMED = {
    "sigma0": lambda: sigma(0),
    "sigma1": lambda: sigma(1),
    "sigma2": lambda: sigma(2),
    "sigma3": lambda: sigma(3),
    "cnot": cnot,
    "u_y": u_y,
    "u_z": u_z,
    "u_chi": u_chi,
    "u_w2": u_w2,
}


def named_operator(name: str) -> LocalOperator:
    """Look up an operator by name: sigma0..sigma3, cnot, u_y, u_z, u_chi,
    u_w2, or gamma1..gamma16."""
    key = name.strip().lower()
    if key.startswith("gamma"):
        try:
            return gamma(int(key[5:]))
        except ValueError:
            raise ValueError(f"unknown operator name {name!r}")
    if key not in _NAMED:
        raise ValueError(f"unknown operator name {name!r}")
    return _NAMED[key]()


@dataclass(frozen=True, eq=False)
class OperatorSet:
    """A level-d family: exactly 4^d unitary operators of arity d."""

    level: int
    members: tuple[LocalOperator, ...]

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError("operator set level must be at least 1")
        members = tuple(self.members)
        if len(members) != 4**self.level:
            raise ValueError(
                f"a level-{self.level} set needs {4 ** self.level} members, "
                f"got {len(members)}"
            )
        for i, m in enumerate(members):
            if m.arity != self.level:
                raise ValueError(
                    f"member {i} has arity {m.arity}, expected {self.level}"
                )
            if not m.is_unitary():
                raise ValueError(f"member {i} is not unitary")
        object.__setattr__(self, "members", members)


def pauli_set() -> OperatorSet:
    """The level-1 base family {sigma0, sigma1, sigma2, sigma3}."""
    return OperatorSet(1, tuple(sigma(i) for i in range(4)))


def gamma_set() -> OperatorSet:
    """The full gamma table as a level-2 family."""
    return OperatorSet(2, tuple(gamma(i) for i in range(1, 17)))


def sigma_construct(base: OperatorSet) -> OperatorSet:
    """Lift a level-d family to level d+1 by the four-block recursion.

    With cyclic successor pairing g_a -> g_{a+1}, the output lists the
    diagonal family, the diagonal family with negated lower block, then the
    two antidiagonal counterparts.
    """
    g = [m.matrix for m in base.members]
    succ = g[1:] + g[:1]
    zero = np.zeros_like(g[0])
    blocks: list[np.ndarray] = []
    for sign in (1.0, -1.0):
        blocks.extend(
            np.block([[a, zero], [zero, sign * b]]) for a, b in zip(g, succ)
        )
    for sign in (1.0, -1.0):
        blocks.extend(
            np.block([[zero, a], [sign * b, zero]]) for a, b in zip(g, succ)
        )
    lvl = base.level + 1
    return OperatorSet(lvl, tuple(LocalOperator(lvl, m) for m in blocks))


def operator_family(level: int) -> OperatorSet:
    """Level-``level`` family obtained by iterating the recursion on the Paulis."""
    if level < 1:
        raise ValueError("level must be at least 1")
    fam = pauli_set()
    for _ in range(level - 1):
        fam = sigma_construct(fam)
    return fam


def independence_rank(ops: Sequence[LocalOperator], tol: float = ATOL) -> int:
    """Linear-independence rank of the flattened, row-normalized matrices.

    Singular values above ``tol`` times the largest are counted.
    """
    ops = list(ops)
    if not ops:
        raise ValueError("need at least one operator")
    arities = {op.arity for op in ops}
    if len(arities) != 1:
        raise ValueError(f"mixed arities in operator list: {sorted(arities)}")
    rows = np.stack([op.matrix.reshape(-1) for op in ops])
    rows = rows / np.linalg.norm(rows, axis=1, keepdims=True)
    s = np.linalg.svd(rows, compute_uv=False)
    return int(np.sum(s > tol * s[0]))


def pauli_string(indices: Sequence[int]) -> LocalOperator:
    """Tensor product sigma_{i1} x ... x sigma_{ik}, first index most significant."""
    idx = tuple(int(i) for i in indices)
    if not idx:
        raise ValueError("a Pauli string needs at least one factor")
    if any(i not in (0, 1, 2, 3) for i in idx):
        raise ValueError(f"Pauli indices must be 0..3, got {idx}")
    mat = _SIGMA[idx[0]]
    for i in idx[1:]:
        mat = np.kron(mat, _SIGMA[i])
    return LocalOperator(len(idx), mat)


@dataclass(frozen=True)
class PlacementReport:
    """Result of an exhaustive search for a realizing operator placement."""

    found: bool
    placement: tuple[int, ...] | None
    best_placement: tuple[int, ...]
    best_overlap: float

    @property
    def residual(self) -> float:
        return 1.0 - self.best_overlap


def find_realizing_application(
    op: LocalOperator, source: PureState, target: PureState, tol: float = ATOL
) -> PlacementReport:
    """Search every ordered target tuple for one where ``op`` maps ``source``
    onto ``target`` up to global phase.

    Placements are tried in lexicographic order; the first with overlap
    magnitude 1 within ``tol`` wins.  Otherwise the best placement and its
    overlap are reported.
    """
    if source.num_qubits != target.num_qubits:
        raise ValueError(
            f"source has {source.num_qubits} qubits but target has "
            f"{target.num_qubits}"
        )
    if op.arity > source.num_qubits:
        raise ValueError(
            f"operator arity {op.arity} exceeds the {source.num_qubits}-qubit state"
        )
    best_mag = -1.0
    best_placement: tuple[int, ...] = ()
    for placement in permutations(range(1, source.num_qubits + 1), op.arity):
        mag = abs(overlap(target, apply_local(source, op, placement)))
        if mag >= 1.0 - tol:
            return PlacementReport(True, placement, placement, float(mag))
        if mag > best_mag:
            best_mag, best_placement = float(mag), placement
    return PlacementReport(False, None, best_placement, best_mag)
