"""Dense state-vector engine for small multi-qubit systems.

Qubit numbering follows ket notation: qubit 1 is the most significant bit
of the amplitude index, so the amplitude of |q1 q2 ... qn> sits at index
q1*2^(n-1) + q2*2^(n-2) + ... + qn.  Every operation is a pure function on
immutable values; returned arrays are marked read-only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "ATOL",
    "EXACT_ATOL",
    "CLUSTER_RTOL",
    "PureState",
    "LocalOperator",
    "DensityMatrix",
    "SchmidtSpectrum",
    "Partition",
    "tensor",
    "apply_local",
    "partial_trace",
    "schmidt_spectrum",
    "schmidt_decomposition",
    "entropy",
    "negativity",
    "overlap",
    "states_close",
    "cluster_values",
]

# Norms, orthogonality and hermiticity are checked at ATOL.  Identities the
# constructions reproduce digit-for-digit are pinned at EXACT_ATOL.  Spectral
# multiplicity counting clusters eigenvalues at CLUSTER_RTOL relative; the
# spectra of interest are exact dyadic rationals, so the gap is enormous.
ATOL = 1e-9
EXACT_ATOL = 1e-12
CLUSTER_RTOL = 1e-7


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized pure state of ``num_qubits`` qubits.

    ``amplitudes`` holds 2^n complex entries in index order; the norm must be
    1 within ATOL or construction fails.
    """

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.num_qubits < 1:
            raise ValueError("a state needs at least one qubit")
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != 2**self.num_qubits:
            raise ValueError(
                f"expected {2 ** self.num_qubits} amplitudes for "
                f"{self.num_qubits} qubits, got {amps.size}"
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > ATOL:
            raise ValueError(f"state is not normalized: norm = {norm!r}")
        object.__setattr__(self, "amplitudes", _freeze(amps))

    @classmethod
    def from_amplitudes(cls, values: Iterable[complex]) -> "PureState":
        """Build a state from a flat amplitude list, inferring the qubit count."""
        arr = np.asarray(list(values), dtype=complex)
        n = int(arr.size).bit_length() - 1
        if arr.size < 2 or 2**n != arr.size:
            raise ValueError(f"amplitude count {arr.size} is not a power of two >= 2")
        return cls(n, arr)

    def tensor_view(self) -> np.ndarray:
        """Read-only view shaped (2,)*n with axis k corresponding to qubit k+1."""
        return self.amplitudes.reshape((2,) * self.num_qubits)


@dataclass(frozen=True, eq=False)
class LocalOperator:
    """Square operator on ``arity`` qubits.

    When applied to targets (t1, .., tk), t1 addresses the most significant
    bit of the matrix index, i.e. the outer 2x2 block structure.
    """

    arity: int
    matrix: np.ndarray

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise ValueError("operator arity must be at least 1")
        mat = np.asarray(self.matrix, dtype=complex)
        dim = 2**self.arity
        if mat.shape != (dim, dim):
            raise ValueError(f"expected a {dim}x{dim} matrix, got shape {mat.shape}")
        object.__setattr__(self, "matrix", _freeze(mat))

    def is_unitary(self, tol: float = ATOL) -> bool:
        dim = self.matrix.shape[0]
        return bool(
            np.max(np.abs(self.matrix.conj().T @ self.matrix - np.eye(dim))) <= tol
        )

    def dagger(self) -> "LocalOperator":
        return LocalOperator(self.arity, self.matrix.conj().T)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace density matrix over ``num_qubits`` qubits."""

    num_qubits: int
    matrix: np.ndarray

    def __post_init__(self) -> None:
        if self.num_qubits < 1:
            raise ValueError("a density matrix needs at least one qubit")
        mat = np.asarray(self.matrix, dtype=complex)
        dim = 2**self.num_qubits
        if mat.shape != (dim, dim):
            raise ValueError(f"expected a {dim}x{dim} matrix, got shape {mat.shape}")
        if np.max(np.abs(mat - mat.conj().T)) > ATOL:
            raise ValueError("density matrix is not Hermitian")
        tr = complex(np.trace(mat))
        if abs(tr - 1.0) > ATOL:
            raise ValueError(f"density matrix trace is {tr!r}, expected 1")
        object.__setattr__(self, "matrix", _freeze(mat))

    def eigenvalues(self) -> np.ndarray:
        """Real eigenvalues in descending order."""
        return np.linalg.eigvalsh(self.matrix)[::-1]


def cluster_values(
    values: Sequence[float], rtol: float = CLUSTER_RTOL
) -> tuple[tuple[float, int], ...]:
    """Group a descending value sequence into (representative, multiplicity) runs.

    A value joins the current run when it lies within ``rtol`` (relative to the
    run's first member) of that member.
    """
    runs: list[list[float]] = []
    for v in values:
        if runs and abs(runs[-1][0] - v) <= rtol * max(abs(runs[-1][0]), abs(v)):
            runs[-1].append(v)
        else:
            runs.append([v])
    return tuple((run[0], len(run)) for run in runs)


@dataclass(frozen=True)
class SchmidtSpectrum:
    """Descending nonzero eigenvalues of a reduced density matrix."""

    eigenvalues: tuple[float, ...]

    def __post_init__(self) -> None:
        vals = tuple(float(v) for v in self.eigenvalues)
        if not vals:
            raise ValueError("a Schmidt spectrum cannot be empty")
        if any(vals[i] < vals[i + 1] for i in range(len(vals) - 1)):
            raise ValueError("eigenvalues must be sorted in descending order")
        if vals[-1] < -EXACT_ATOL:
            raise ValueError(f"negative eigenvalue {vals[-1]!r}")
        vals = tuple(max(v, 0.0) for v in vals)
        total = sum(vals)
        if abs(total - 1.0) > ATOL:
            raise ValueError(f"eigenvalues sum to {total!r}, expected 1")
        object.__setattr__(self, "eigenvalues", vals)

    @property
    def rank(self) -> int:
        return len(self.eigenvalues)

    def clustered(self, rtol: float = CLUSTER_RTOL) -> tuple[tuple[float, int], ...]:
        """Eigenvalues grouped into (value, multiplicity) clusters."""
        return cluster_values(self.eigenvalues, rtol)


@dataclass(frozen=True)
class Partition:
    """Bipartition of qubits 1..n into a sender and a receiver side."""

    sender: frozenset[int]
    receiver: frozenset[int]

    def __post_init__(self) -> None:
        sender = frozenset(int(q) for q in self.sender)
        receiver = frozenset(int(q) for q in self.receiver)
        if not sender or not receiver:
            raise ValueError("both sides of a partition must be non-empty")
        if sender & receiver:
            raise ValueError("partition sides must be disjoint")
        union = sender | receiver
        if min(union) < 1 or len(union) != max(union):
            raise ValueError("partition must cover qubits 1..n without gaps")
        object.__setattr__(self, "sender", sender)
        object.__setattr__(self, "receiver", receiver)

    @classmethod
    def from_sender(cls, sender: Iterable[int], num_qubits: int) -> "Partition":
        """Partition with the given sender set; the rest of 1..n receives."""
        s = frozenset(int(q) for q in sender)
        return cls(s, frozenset(range(1, num_qubits + 1)) - s)

    @property
    def num_qubits(self) -> int:
        return len(self.sender) + len(self.receiver)

    def sides(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(sorted sender, sorted receiver)."""
        return tuple(sorted(self.sender)), tuple(sorted(self.receiver))


def _require_cut(state: PureState, cut: Partition) -> None:
    if cut.num_qubits != state.num_qubits:
        raise ValueError(
            f"partition covers {cut.num_qubits} qubits but the state has "
            f"{state.num_qubits}"
        )


def tensor(a: PureState, b: PureState) -> PureState:
    """Tensor product with ``a``'s qubits first (most significant)."""
    return PureState(a.num_qubits + b.num_qubits, np.kron(a.amplitudes, b.amplitudes))


def apply_local(
    state: PureState, op: LocalOperator, targets: Sequence[int]
) -> PureState:
    """Apply ``op`` to the listed target qubits (1-based, order-significant).

    The first target addresses the most significant bit of the operator's
    basis.  ``op`` must be unitary for the result to remain normalized;
    anything else fails the output norm check.
    """
    n, k = state.num_qubits, op.arity
    targets = tuple(int(t) for t in targets)
    if len(targets) != k:
        raise ValueError(f"operator arity {k} does not match {len(targets)} targets")
    if len(set(targets)) != len(targets):
        raise ValueError(f"duplicate target qubit in {targets}")
    if any(t < 1 or t > n for t in targets):
        raise ValueError(f"target out of range 1..{n}: {targets}")
    axes = [t - 1 for t in targets]
    psi = state.tensor_view()
    u = op.matrix.reshape((2,) * (2 * k))
    out = np.tensordot(u, psi, axes=(tuple(range(k, 2 * k)), axes))
    out = np.moveaxis(out, tuple(range(k)), axes)
    return PureState(n, out.reshape(-1))


def partial_trace(state: PureState, keep: Iterable[int]) -> DensityMatrix:
    """Reduced density matrix on the kept qubits (ascending index order)."""
    n = state.num_qubits
    kept = sorted({int(q) for q in keep})
    if not kept:
        raise ValueError("must keep at least one qubit")
    if kept[0] < 1 or kept[-1] > n:
        raise ValueError(f"kept qubits out of range 1..{n}: {kept}")
    traced = [q for q in range(1, n + 1) if q not in kept]
    perm = [q - 1 for q in kept] + [q - 1 for q in traced]
    m = state.tensor_view().transpose(perm).reshape(2 ** len(kept), -1)
    return DensityMatrix(len(kept), m @ m.conj().T)


def _split_matrix(
    state: PureState, rows: Sequence[int], cols: Sequence[int]
) -> np.ndarray:
    psi = state.tensor_view()
    perm = [q - 1 for q in rows] + [q - 1 for q in cols]
    return psi.transpose(perm).reshape(2 ** len(rows), 2 ** len(cols))


def schmidt_decomposition(
    state: PureState, cut: Partition
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Schmidt coefficients and matched orthonormal bases across a cut.

    Returns ``(coeffs, sender_vectors, receiver_vectors)`` with coefficients
    descending, ``sender_vectors[:, k]`` an amplitude vector on the sorted
    sender qubits and ``receiver_vectors[k, :]`` one on the sorted receiver
    qubits.  Coefficients with squared weight below EXACT_ATOL are dropped.
    """
    _require_cut(state, cut)
    a, b = cut.sides()
    u, s, vh = np.linalg.svd(_split_matrix(state, a, b), full_matrices=False)
    keep = (s * s) > EXACT_ATOL
    return s[keep], u[:, keep], vh[keep, :]


def schmidt_spectrum(state: PureState, cut: Partition) -> SchmidtSpectrum:
    """Eigenvalues of either side's reduced density matrix, zeros dropped."""
    _require_cut(state, cut)
    a, b = cut.sides()
    s = np.linalg.svd(_split_matrix(state, a, b), compute_uv=False)
    lam = np.sort(s * s)[::-1]
    lam = lam[lam > EXACT_ATOL]
    return SchmidtSpectrum(tuple(float(x) for x in lam))


def entropy(spectrum: SchmidtSpectrum) -> float:
    """Von Neumann entropy in bits, with the 0*log(0) = 0 convention."""
    return float(-sum(p * math.log2(p) for p in spectrum.eigenvalues if p > 0.0))


def negativity(state: PureState, cut: Partition) -> float:
    """Entanglement negativity across a cut.

    Computed as the sum of |negative eigenvalues| of the density matrix
    partially transposed on the receiver side (not doubled).  Dense in the
    full 2^n dimension, so intended for n up to ~10.
    """
    _require_cut(state, cut)
    n = state.num_qubits
    rho = np.outer(state.amplitudes, state.amplitudes.conj())
    rho = rho.reshape((2,) * (2 * n))
    perm = list(range(2 * n))
    for q in cut.receiver:
        perm[q - 1], perm[n + q - 1] = perm[n + q - 1], perm[q - 1]
    pt = rho.transpose(perm).reshape(2**n, 2**n)
    vals = np.linalg.eigvalsh(pt)
    return float(-vals[vals < 0.0].sum())


def overlap(a: PureState, b: PureState) -> complex:
    """Inner product <a|b> (conjugate-linear in ``a``)."""
    if a.num_qubits != b.num_qubits:
        raise ValueError(
            f"qubit count mismatch: {a.num_qubits} vs {b.num_qubits}"
        )
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def states_close(a: PureState, b: PureState, atol: float = ATOL) -> bool:
    """Amplitude-wise equality within ``atol`` (no global-phase allowance)."""
    if a.num_qubits != b.num_qubits:
        return False
    return bool(np.max(np.abs(a.amplitudes - b.amplitudes)) <= atol)
