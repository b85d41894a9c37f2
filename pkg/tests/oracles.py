"""Independent brute-force reference implementations used as test oracles.

Everything here works on raw amplitude arrays with explicit index bit
arithmetic, deliberately avoiding the reshape/tensordot machinery of the
package under test.  Qubit 1 is the most significant bit throughout.
"""

from __future__ import annotations

import math

import numpy as np


def bit_of(index: int, qubit: int, num_qubits: int) -> int:
    """Value of 1-based ``qubit`` inside a basis index."""
    return (index >> (num_qubits - qubit)) & 1


def sub_index(index: int, qubits, num_qubits: int) -> int:
    """Pack the listed qubits' bits (in the given order) into one integer."""
    out = 0
    for q in qubits:
        out = (out << 1) | bit_of(index, q, num_qubits)
    return out


def brute_reduced_density(amps, num_qubits: int, keep) -> np.ndarray:
    """Reduced density matrix on ``keep`` (ascending), by direct summation."""
    keep = sorted(keep)
    traced = [q for q in range(1, num_qubits + 1) if q not in keep]
    dim = 2 ** len(keep)
    rho = np.zeros((dim, dim), dtype=complex)
    nz = [i for i in range(2**num_qubits) if abs(amps[i]) > 1e-16]
    for i in nz:
        for j in nz:
            if sub_index(i, traced, num_qubits) != sub_index(j, traced, num_qubits):
                continue
            rho[sub_index(i, keep, num_qubits), sub_index(j, keep, num_qubits)] += amps[
                i
            ] * np.conj(amps[j])
    return rho


def brute_spectrum(amps, num_qubits: int, side) -> np.ndarray:
    """Nonzero eigenvalues of the reduced state on ``side``, descending."""
    rho = brute_reduced_density(amps, num_qubits, side)
    vals = np.linalg.eigvalsh(rho)[::-1]
    return vals[vals > 1e-12]


def brute_apply(amps, num_qubits: int, matrix, targets) -> np.ndarray:
    """Apply a 2^k x 2^k matrix to ordered 1-based targets, index by index."""
    k = len(targets)
    out = np.zeros_like(np.asarray(amps, dtype=complex))
    for i in range(2**num_qubits):
        row = sub_index(i, targets, num_qubits)
        acc = 0.0 + 0.0j
        for col in range(2**k):
            src = i
            for pos, q in enumerate(targets):
                shift = num_qubits - q
                bit = (col >> (k - 1 - pos)) & 1
                src = (src & ~(1 << shift)) | (bit << shift)
            acc += matrix[row, col] * amps[src]
        out[i] = acc
    return out


def brute_negativity(amps, num_qubits: int, transpose_qubits) -> float:
    """Sum of negative eigenvalues (absolute) after partial transposition."""
    dim = 2**num_qubits
    rho = np.outer(amps, np.conj(np.asarray(amps)))
    pt = np.zeros_like(rho)
    for i in range(dim):
        for j in range(dim):
            i2, j2 = i, j
            for q in transpose_qubits:
                shift = num_qubits - q
                if ((i >> shift) ^ (j >> shift)) & 1:
                    i2 ^= 1 << shift
                    j2 ^= 1 << shift
            pt[i2, j2] = rho[i, j]
    eigs = np.linalg.eigvalsh(pt)
    return float(-np.sum(eigs[eigs < 0]))


def brute_max_orthogonal(vectors, tol: float = 1e-9) -> int:
    """Largest pairwise-orthogonal subset by exhaustive search with a simple
    bound; safe for up to ~16 vectors."""
    n = len(vectors)
    ok = [
        [abs(np.vdot(vectors[a], vectors[b])) <= tol for b in range(n)]
        for a in range(n)
    ]
    best = 0

    def extend(start: int, members: list[int]) -> None:
        nonlocal best
        best = max(best, len(members))
        for v in range(start, n):
            if len(members) + (n - v) <= best:
                break
            if all(ok[v][u] for u in members):
                members.append(v)
                extend(v + 1, members)
                members.pop()

    extend(0, [])
    return best


def two_adic(x: int) -> int:
    """Exponent of two in ``x`` by repeated division."""
    if x <= 0:
        raise ValueError("positive integers only")
    count = 0
    while x % 2 == 0:
        x //= 2
        count += 1
    return count


def shannon_bits(values) -> float:
    """Base-2 entropy of a probability vector, ignoring zeros."""
    total = 0.0
    for v in values:
        if v > 0:
            total -= v * math.log2(v)
    return total
