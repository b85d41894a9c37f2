"""Core statevector machinery against brute-force index-arithmetic oracles."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    brute_apply,
    brute_negativity,
    brute_reduced_density,
    brute_spectrum,
    shannon_bits,
)
from tmes.capacity import haar_random_state, haar_random_unitary
from tmes.statevec import (
    ATOL,
    EXACT_ATOL,
    LocalOperator,
    Partition,
    PureState,
    SchmidtSpectrum,
    apply_local,
    cluster_values,
    entropy,
    negativity,
    overlap,
    partial_trace,
    schmidt_decomposition,
    schmidt_spectrum,
    states_close,
    tensor,
)
from tmes.states import basis_state, bell, bell_product, ghz, odd_resource, w_state

SEEDS = st.integers(min_value=0, max_value=10**6)


def _random_unitary(arity: int, seed: int) -> LocalOperator:
    rng = np.random.default_rng(seed)
    return LocalOperator(arity, haar_random_unitary(2**arity, rng))


class TestPureState:
    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError):
            PureState(1, np.array([1.0, 1.0]))

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            PureState(2, np.array([1.0, 0.0]))

    def test_qubit_one_is_most_significant(self):
        state = basis_state("10")
        assert state.amplitudes[0b10] == 1.0
        assert state.tensor_view()[1, 0] == 1.0

    def test_amplitudes_read_only(self):
        state = bell()
        with pytest.raises(ValueError):
            state.amplitudes[0] = 0.0


class TestPartition:
    def test_from_sender(self):
        cut = Partition.from_sender((3, 1), 4)
        assert cut.sender == frozenset({1, 3})
        assert cut.receiver == frozenset({2, 4})
        assert cut.sides() == ((1, 3), (2, 4))

    def test_rejects_bad_sets(self):
        with pytest.raises(ValueError):
            Partition.from_sender((), 3)
        with pytest.raises(ValueError):
            Partition.from_sender((1, 2, 3), 3)
        with pytest.raises(ValueError):
            Partition.from_sender((0,), 3)
        with pytest.raises(ValueError):
            Partition(frozenset({1}), frozenset({1, 2}))


class TestApplyLocal:
    def test_matches_brute_force_one_qubit(self):
        state = haar_random_state(3, seed=5)
        op = _random_unitary(1, seed=11)
        for target in (1, 2, 3):
            got = apply_local(state, op, (target,))
            want = brute_apply(state.amplitudes, 3, op.matrix, (target,))
            assert np.allclose(got.amplitudes, want, atol=1e-12)

    def test_matches_brute_force_two_qubit_ordered(self):
        state = haar_random_state(4, seed=9)
        op = _random_unitary(2, seed=3)
        for targets in ((1, 3), (3, 1), (2, 4), (4, 2), (1, 2)):
            got = apply_local(state, op, targets)
            want = brute_apply(state.amplitudes, 4, op.matrix, targets)
            assert np.allclose(got.amplitudes, want, atol=1e-12)

    @settings(max_examples=30, deadline=None)
    @given(seed=SEEDS, op_seed=SEEDS, flip=st.booleans())
    def test_target_order_matters_like_brute_force(self, seed, op_seed, flip):
        state = haar_random_state(3, seed=seed)
        op = _random_unitary(2, seed=op_seed)
        targets = (3, 1) if flip else (1, 3)
        got = apply_local(state, op, targets)
        want = brute_apply(state.amplitudes, 3, op.matrix, targets)
        assert np.allclose(got.amplitudes, want, atol=1e-12)

    def test_rejects_bad_targets(self):
        state = bell()
        op = _random_unitary(1, seed=0)
        with pytest.raises(ValueError):
            apply_local(state, op, (1, 2))
        with pytest.raises(ValueError):
            apply_local(state, op, (3,))
        two = _random_unitary(2, seed=0)
        with pytest.raises(ValueError):
            apply_local(state, two, (1, 1))


class TestPartialTrace:
    @pytest.mark.parametrize(
        "state,keep",
        [
            (bell(), (1,)),
            (ghz(3), (2,)),
            (ghz(4), (1, 3)),
            (bell_product(2), (2, 4)),
            (w_state(2), (1, 2)),
        ],
    )
    def test_matches_brute_force_catalog(self, state, keep):
        got = partial_trace(state, keep).matrix
        want = brute_reduced_density(state.amplitudes, state.num_qubits, keep)
        assert np.allclose(got, want, atol=1e-12)

    @settings(max_examples=25, deadline=None)
    @given(seed=SEEDS, keep_mask=st.integers(min_value=1, max_value=14))
    def test_matches_brute_force_random(self, seed, keep_mask):
        state = haar_random_state(4, seed=seed)
        keep = tuple(q for q in range(1, 5) if keep_mask & (1 << (q - 1)))
        got = partial_trace(state, keep).matrix
        want = brute_reduced_density(state.amplitudes, 4, keep)
        assert np.allclose(got, want, atol=1e-12)

    def test_trace_is_one(self):
        rho = partial_trace(haar_random_state(4, seed=2), (2, 3)).matrix
        assert abs(np.trace(rho) - 1.0) < 1e-12


class TestSchmidt:
    def test_spectrum_matches_brute_force(self):
        for seed in (0, 1, 2):
            state = haar_random_state(4, seed=seed)
            cut = Partition.from_sender((1, 4), 4)
            got = np.asarray(schmidt_spectrum(state, cut).eigenvalues)
            want = brute_spectrum(state.amplitudes, 4, (1, 4))
            assert got.shape == want.shape
            assert np.allclose(got, want, atol=1e-9)

    def test_spectrum_drops_exact_zeros(self):
        spec = schmidt_spectrum(odd_resource(1), Partition.from_sender((1, 3), 3))
        assert spec.rank == 2
        assert np.allclose(spec.eigenvalues, (0.5, 0.5), atol=1e-12)

    def test_decomposition_reconstructs_state(self):
        state = haar_random_state(5, seed=7)
        cut = Partition.from_sender((2, 4), 5)
        coeffs, a_vecs, b_vecs = schmidt_decomposition(state, cut)
        assert np.allclose(a_vecs.conj().T @ a_vecs, np.eye(coeffs.size), atol=1e-12)
        assert np.allclose(b_vecs @ b_vecs.conj().T, np.eye(coeffs.size), atol=1e-12)
        rebuilt = (a_vecs * coeffs) @ b_vecs
        view = state.tensor_view().transpose([1, 3, 0, 2, 4]).reshape(4, 8)
        assert np.allclose(rebuilt, view, atol=1e-12)

    def test_spectrum_sums_to_one(self):
        state = haar_random_state(4, seed=13)
        spec = schmidt_spectrum(state, Partition.from_sender((1,), 4))
        assert abs(sum(spec.eigenvalues) - 1.0) < 1e-9

    def test_both_sides_agree(self):
        state = haar_random_state(5, seed=3)
        a = schmidt_spectrum(state, Partition.from_sender((1, 2), 5))
        b = schmidt_spectrum(state, Partition.from_sender((3, 4, 5), 5))
        assert np.allclose(a.eigenvalues, b.eigenvalues, atol=1e-9)


class TestClusterValues:
    def test_groups_close_values(self):
        clusters = cluster_values((0.5, 0.5 - 1e-9, 0.25))
        assert [m for _, m in clusters] == [2, 1]

    def test_separates_distinct_values(self):
        clusters = cluster_values((0.5, 0.3, 0.2))
        assert [m for _, m in clusters] == [1, 1, 1]

    def test_flat_spectrum_single_cluster(self):
        spec = schmidt_spectrum(bell_product(2), Partition.from_sender((1, 3), 4))
        assert spec.clustered() == ((pytest.approx(0.25), 4),)


class TestDiagnostics:
    def test_entropy_closed_forms(self):
        assert entropy(SchmidtSpectrum((1.0,))) == pytest.approx(0.0, abs=1e-12)
        assert entropy(SchmidtSpectrum((0.5, 0.5))) == pytest.approx(1.0, abs=1e-12)
        spec = schmidt_spectrum(w_state(2), Partition.from_sender((1,), 3))
        assert entropy(spec) == pytest.approx(
            shannon_bits([5 / 6, 1 / 6]), abs=1e-12
        )

    @pytest.mark.parametrize(
        "state,cut,expected",
        [
            (bell(), (1,), 0.5),
            (ghz(4), (1, 2), 0.5),
        ],
    )
    def test_negativity_known_values(self, state, cut, expected):
        part = Partition.from_sender(cut, state.num_qubits)
        assert negativity(state, part) == pytest.approx(expected, abs=1e-9)

    @settings(max_examples=20, deadline=None)
    @given(seed=SEEDS)
    def test_negativity_matches_brute_force(self, seed):
        state = haar_random_state(3, seed=seed)
        part = Partition.from_sender((2,), 3)
        want = brute_negativity(state.amplitudes, 3, sorted(part.receiver))
        assert negativity(state, part) == pytest.approx(want, abs=1e-9)


class TestOverlapAndCloseness:
    def test_overlap_conjugate_symmetry(self):
        a = haar_random_state(3, seed=1)
        b = haar_random_state(3, seed=2)
        assert overlap(a, b) == pytest.approx(np.conj(overlap(b, a)), abs=1e-12)
        assert abs(overlap(a, b)) <= 1.0 + 1e-12

    def test_states_close_is_phase_sensitive(self):
        state = bell()
        flipped = PureState(2, -state.amplitudes)
        assert states_close(state, state)
        assert not states_close(state, flipped)

    def test_tensor_layout(self):
        left = basis_state("1")
        right = basis_state("0")
        assert tensor(left, right).amplitudes[0b10] == 1.0

    def test_mismatched_sizes_rejected(self):
        with pytest.raises(ValueError):
            overlap(bell(), ghz(3))


class TestLocalOperator:
    def test_unitary_check(self):
        assert _random_unitary(2, seed=4).is_unitary()
        assert not LocalOperator(1, np.array([[1.0, 0.0], [0.0, 2.0]])).is_unitary()

    def test_dagger_inverts(self):
        op = _random_unitary(1, seed=8)
        assert np.allclose(op.dagger().matrix @ op.matrix, np.eye(2), atol=1e-12)

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            LocalOperator(2, np.eye(2))

    def test_constants_sane(self):
        assert EXACT_ATOL < ATOL
