"""Operator catalog: pinned matrices, the 16-member table, family recursion."""

from __future__ import annotations

import math

import numpy as np
import pytest

from tmes.operators import (
    OperatorSet,
    PlacementReport,
    cnot,
    find_realizing_application,
    gamma,
    gamma_set,
    independence_rank,
    named_operator,
    operator_family,
    pauli_set,
    pauli_string,
    sigma,
    sigma_construct,
    u_chi,
    u_w2,
    u_y,
    u_z,
)
from tmes.statevec import LocalOperator
from tmes.states import basis_state, bell_product, cluster4

S = [
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
]
Z2 = np.zeros((2, 2), dtype=complex)


class TestSingleQubit:
    def test_pauli_literals(self):
        for k in range(4):
            assert np.array_equal(sigma(k).matrix, S[k])

    def test_pauli_index_bounds(self):
        for bad in (-1, 4):
            with pytest.raises(ValueError):
                sigma(bad)

    def test_pauli_algebra(self):
        assert np.allclose(S[1] @ S[2], 1j * S[3], atol=1e-15)
        for k in range(4):
            assert np.allclose(S[k] @ S[k], S[0], atol=1e-15)


class TestTwoQubitGates:
    def test_cnot_first_target_is_control(self):
        want = np.block([[S[0], Z2], [Z2, S[1]]])
        assert np.array_equal(cnot().matrix, want)

    def test_controlled_pauli_gates(self):
        assert np.array_equal(u_y().matrix, np.block([[S[0], Z2], [Z2, S[2]]]))
        assert np.array_equal(u_z().matrix, np.block([[S[0], Z2], [Z2, S[3]]]))

    def test_u_chi_matrix(self):
        r = 1.0 / math.sqrt(2.0)
        want = r * np.array(
            [
                [1, 0, 0, 1],
                [0, -1, 1, 0],
                [0, 1, 1, 0],
                [-1, 0, 0, 1],
            ],
            dtype=complex,
        )
        assert np.allclose(u_chi().matrix, want, atol=1e-15)
        assert u_chi().is_unitary()

    def test_u_w2_matrix(self):
        r = 1.0 / math.sqrt(2.0)
        want = np.array(
            [
                [0, r, r, 0],
                [0, 0, 0, 1],
                [1, 0, 0, 0],
                [0, r, -r, 0],
            ],
            dtype=complex,
        )
        assert np.allclose(u_w2().matrix, want, atol=1e-15)
        assert u_w2().is_unitary()


# Independent transcription of the sixteen two-qubit table members: four
# diagonal with cyclically paired Paulis, four with the lower block negated,
# then the same eight moved to the antidiagonal.
def _expected_gamma_matrices() -> list[np.ndarray]:
    pairs = [(0, 1), (1, 2), (2, 3), (3, 0)]
    mats = []
    for a, b in pairs:
        mats.append(np.block([[S[a], Z2], [Z2, S[b]]]))
    for a, b in pairs:
        mats.append(np.block([[S[a], Z2], [Z2, -S[b]]]))
    for a, b in pairs:
        mats.append(np.block([[Z2, S[a]], [S[b], Z2]]))
    for a, b in pairs:
        mats.append(np.block([[Z2, S[a]], [-S[b], Z2]]))
    return mats


class TestGammaTable:
    def test_matches_independent_transcription(self):
        expected = _expected_gamma_matrices()
        for k in range(1, 17):
            assert np.allclose(gamma(k).matrix, expected[k - 1], atol=1e-12)

    def test_index_bounds(self):
        for bad in (0, 17, -3):
            with pytest.raises(ValueError):
                gamma(bad)

    def test_all_unitary(self):
        assert all(gamma(k).is_unitary(tol=1e-12) for k in range(1, 17))

    def test_pairwise_trace_orthogonal(self):
        mats = [gamma(k).matrix for k in range(1, 17)]
        for i in range(16):
            for j in range(16):
                hs_inner = np.trace(mats[i].conj().T @ mats[j])
                want = 4.0 if i == j else 0.0
                assert abs(hs_inner - want) < 1e-12

    def test_full_rank(self):
        assert independence_rank(gamma_set().members) == 16


class TestFamilies:
    def test_pauli_set_is_level_one(self):
        base = pauli_set()
        assert base.level == 1 and len(base.members) == 4
        assert independence_rank(base.members) == 4

    def test_operator_family_counts(self):
        for level in (1, 2, 3):
            fam = operator_family(level)
            assert fam.level == level
            assert len(fam.members) == 4**level
            assert all(m.arity == level for m in fam.members)
        with pytest.raises(ValueError):
            operator_family(0)

    def test_level_two_family_is_the_gamma_table(self):
        fam = operator_family(2)
        for got, want in zip(fam.members, gamma_set().members):
            assert np.allclose(got.matrix, want.matrix, atol=1e-12)

    def test_recursion_block_structure(self):
        lifted = sigma_construct(pauli_set())
        # diagonal family pairs g_a with its cyclic successor
        assert np.allclose(
            lifted.members[0].matrix, np.block([[S[0], Z2], [Z2, S[1]]]), atol=1e-15
        )
        assert np.allclose(
            lifted.members[3].matrix, np.block([[S[3], Z2], [Z2, S[0]]]), atol=1e-15
        )
        # second family negates the lower block, third moves to the antidiagonal
        assert np.allclose(
            lifted.members[4].matrix, np.block([[S[0], Z2], [Z2, -S[1]]]), atol=1e-15
        )
        assert np.allclose(
            lifted.members[8].matrix, np.block([[Z2, S[0]], [S[1], Z2]]), atol=1e-15
        )

    def test_operator_set_validation(self):
        with pytest.raises(ValueError):
            OperatorSet(1, tuple(sigma(0) for _ in range(3)))
        with pytest.raises(ValueError):
            OperatorSet(2, tuple(sigma(0) for _ in range(16)))
        scaled = LocalOperator(1, 2.0 * S[0])
        with pytest.raises(ValueError):
            OperatorSet(1, (sigma(0), sigma(1), sigma(2), scaled))


class TestIndependenceRank:
    def test_dependent_list(self):
        assert independence_rank([sigma(0), sigma(0), sigma(1)]) == 2

    def test_rejects_empty_and_mixed(self):
        with pytest.raises(ValueError):
            independence_rank([])
        with pytest.raises(ValueError):
            independence_rank([sigma(0), cnot()])


class TestPauliString:
    def test_matches_manual_kron(self):
        got = pauli_string([3, 1]).matrix
        assert np.allclose(got, np.kron(S[3], S[1]), atol=1e-15)
        got = pauli_string([1, 0, 2]).matrix
        assert np.allclose(got, np.kron(np.kron(S[1], S[0]), S[2]), atol=1e-15)

    def test_first_index_most_significant(self):
        # sigma3 x sigma0 acts as a phase on the high bit
        mat = pauli_string([3, 0]).matrix
        assert mat[0, 0] == 1.0 and mat[3, 3] == -1.0

    def test_validation(self):
        with pytest.raises(ValueError):
            pauli_string([])
        with pytest.raises(ValueError):
            pauli_string([0, 4])


class TestNamedLookup:
    @pytest.mark.parametrize(
        "name,want",
        [
            ("sigma0", sigma(0)),
            ("sigma2", sigma(2)),
            ("cnot", cnot()),
            ("u_y", u_y()),
            ("u_z", u_z()),
            ("u_chi", u_chi()),
            ("u_w2", u_w2()),
            ("gamma1", gamma(1)),
            ("gamma16", gamma(16)),
            ("  GAMMA5 ", gamma(5)),
        ],
    )
    def test_lookup(self, name, want):
        assert np.allclose(named_operator(name).matrix, want.matrix, atol=1e-15)

    @pytest.mark.parametrize("name", ["bogus", "gamma0", "gamma17", "gammaX", ""])
    def test_unknown_names(self, name):
        with pytest.raises(ValueError):
            named_operator(name)


class TestPlacementSearch:
    def test_finds_entangling_placement(self):
        report = find_realizing_application(cnot(), bell_product(2), cluster4())
        assert report.found
        assert report.placement == (1, 3)
        assert report.best_overlap == pytest.approx(1.0, abs=1e-12)
        assert report.residual == pytest.approx(0.0, abs=1e-12)

    def test_reports_best_when_unreachable(self):
        report = find_realizing_application(
            sigma(1), basis_state("00"), basis_state("11")
        )
        assert not report.found
        assert report.placement is None
        assert report.best_overlap == pytest.approx(0.0, abs=1e-12)
        assert report.best_placement in ((1,), (2,))

    def test_validation(self):
        with pytest.raises(ValueError):
            find_realizing_application(cnot(), basis_state("0"), basis_state("0"))
        with pytest.raises(ValueError):
            find_realizing_application(
                sigma(1), basis_state("0"), basis_state("00")
            )

    def test_report_shape(self):
        report = PlacementReport(False, None, (1, 2), 0.25)
        assert report.residual == pytest.approx(0.75)
