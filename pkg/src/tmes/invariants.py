"""Local-unitary invariants: bipartition spectra, conversion obstructions,
genuine multipartite entanglement, and Pauli relabeling families.

A unitary supported on a qubit subset cannot change the Schmidt spectrum of
any cut that keeps the subset entirely on one side; comparing spectra of a
source and a target state across all such cuts therefore certifies when no
placement of a local gate can realize the conversion.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .capacity import pauli_digits
from .operators import pauli_string
from .statevec import (
    ATOL,
    CLUSTER_RTOL,
    EXACT_ATOL,
    Partition,
    PureState,
    SchmidtSpectrum,
    apply_local,
    schmidt_spectrum,
)

# Spectra enumeration is exponential in qubit count; this guard keeps calls
# comfortably interactive.
MAX_QUBITS = 12


def all_bipartitions(num_qubits: int) -> tuple[Partition, ...]:
    """Every unordered bipartition once, smaller side as sender.

    Balanced splits keep the side containing qubit 1.  Ordered by sender
    size, then lexicographically.
    """
    if num_qubits < 2:
        raise ValueError("bipartitions need at least two qubits")
    parts = []
    for size in range(1, num_qubits // 2 + 1):
        for combo in combinations(range(1, num_qubits + 1), size):
            if 2 * size == num_qubits and combo[0] != 1:
                continue
            parts.append(Partition.from_sender(combo, num_qubits))
    return tuple(parts)


def all_bipartition_spectra(
    state: PureState,
) -> dict[Partition, SchmidtSpectrum]:
    """Schmidt spectrum of every bipartition, keyed by canonical partition."""
    if state.num_qubits > MAX_QUBITS:
        raise ValueError(
            f"spectra enumeration is capped at {MAX_QUBITS} qubits, "
            f"got {state.num_qubits}"
        )
    return {
        cut: schmidt_spectrum(state, cut)
        for cut in all_bipartitions(state.num_qubits)
    }


def spectra_match(
    a: SchmidtSpectrum, b: SchmidtSpectrum, rtol: float = CLUSTER_RTOL
) -> bool:
    """Equal rank and elementwise agreement at relative tolerance."""
    if a.rank != b.rank:
        return False
    av = np.asarray(a.eigenvalues)
    bv = np.asarray(b.eigenvalues)
    return bool(np.all(np.abs(av - bv) <= rtol * np.maximum(av, bv) + EXACT_ATOL))


@dataclass(frozen=True)
class CutViolation:
    """A cut whose spectra differ between source and target."""

    cut: Partition
    source_spectrum: SchmidtSpectrum
    target_spectrum: SchmidtSpectrum


@dataclass(frozen=True)
class ObstructionReport:
    """Cuts ruling out a conversion by a unitary on ``acting_subset``."""

    acting_subset: frozenset[int]
    violated_cuts: tuple[CutViolation, ...]

    @property
    def obstructed(self) -> bool:
        return bool(self.violated_cuts)


def conversion_obstruction(
    source: PureState,
    target: PureState,
    acting_subset: Iterable[int],
    rtol: float = CLUSTER_RTOL,
) -> ObstructionReport:
    """Spectral certificate that no unitary on the subset maps source to target.

    Checks every cut keeping the subset on one side; any spectrum mismatch is
    a violation.  An empty report is necessary but not sufficient for the
    conversion to exist.
    """
    if source.num_qubits != target.num_qubits:
        raise ValueError("source and target must have the same qubit count")
    n = source.num_qubits
    subset = frozenset(int(q) for q in acting_subset)
    if not subset:
        raise ValueError("acting subset is empty")
    if min(subset) < 1 or max(subset) > n:
        raise ValueError(f"acting subset out of range 1..{n}: {sorted(subset)}")
    violations = []
    for cut in all_bipartitions(n):
        if not (subset <= cut.sender or subset <= cut.receiver):
            continue
        sa = schmidt_spectrum(source, cut)
        sb = schmidt_spectrum(target, cut)
        if not spectra_match(sa, sb, rtol):
            violations.append(CutViolation(cut, sa, sb))
    return ObstructionReport(subset, tuple(violations))


def genuine_multipartite(state: PureState, tol: float = ATOL) -> bool:
    """True when no bipartition is a product (every cut has rank >= 2)."""
    for cut in all_bipartitions(state.num_qubits):
        if schmidt_spectrum(state, cut).eigenvalues[0] >= 1.0 - tol:
            return False
    return True


@dataclass(frozen=True, eq=False)
class OrthogonalFamily:
    """All Pauli-string relabelings of a state on a subset, with their Gram
    matrix (indexed by Pauli label)."""

    subset: frozenset[int]
    states: tuple[PureState, ...]
    gram: np.ndarray

    def __post_init__(self) -> None:
        g = np.asarray(self.gram, dtype=complex)
        g.setflags(write=False)
        object.__setattr__(self, "subset", frozenset(self.subset))
        object.__setattr__(self, "gram", g)

    def mutually_orthogonal(self, tol: float = ATOL) -> bool:
        off = self.gram - np.diag(np.diagonal(self.gram))
        return bool(np.max(np.abs(off)) <= tol)


def orthogonal_family(state: PureState, subset: Iterable[int]) -> OrthogonalFamily:
    """Apply all 4^|subset| Pauli strings on the subset and collect overlaps."""
    qubits = tuple(sorted({int(q) for q in subset}))
    n = state.num_qubits
    if not qubits:
        raise ValueError("subset is empty")
    if qubits[0] < 1 or qubits[-1] > n:
        raise ValueError(f"subset out of range 1..{n}: {qubits}")
    s = len(qubits)
    states = tuple(
        apply_local(state, pauli_string(pauli_digits(d, s)), qubits)
        for d in range(4**s)
    )
    stack = np.stack([st.amplitudes for st in states])
    gram = stack.conj() @ stack.T
    return OrthogonalFamily(frozenset(qubits), states, gram)
