"""JSON persistence: exact round trips and header validation."""

from __future__ import annotations

import json

import numpy as np
import pytest

from tmes.capacity import haar_random_state
from tmes.operators import gamma_set, operator_family, u_chi, u_w2
from tmes.serialize import (
    CONVENTION,
    FORMAT_VERSION,
    load_operator,
    load_operator_set,
    load_state,
    operator_from_dict,
    operator_set_from_dict,
    operator_set_to_dict,
    operator_to_dict,
    save_operator,
    save_operator_set,
    save_state,
    state_from_dict,
    state_to_dict,
)
from tmes.states import bell, chi, cluster5, hs, w_state


class TestStateRoundTrip:
    @pytest.mark.parametrize(
        "state",
        [bell("psi-"), chi(), hs(), cluster5(), w_state(2)],
        ids=["bell", "chi", "hs", "cluster5", "w2"],
    )
    def test_dict_round_trip_is_exact(self, state):
        back = state_from_dict(state_to_dict(state))
        assert back.num_qubits == state.num_qubits
        assert np.array_equal(back.amplitudes, state.amplitudes)

    def test_random_state_exact(self):
        state = haar_random_state(4, seed=42)
        back = state_from_dict(state_to_dict(state))
        assert np.array_equal(back.amplitudes, state.amplitudes)

    def test_file_round_trip(self, tmp_path):
        state = hs()
        path = tmp_path / "state.json"
        save_state(state, path)
        back = load_state(path)
        assert np.array_equal(back.amplitudes, state.amplitudes)

    def test_header_fields(self):
        doc = state_to_dict(bell())
        assert doc["format_version"] == FORMAT_VERSION
        assert doc["kind"] == "state"
        assert doc["convention"] == CONVENTION == "q1-msb"
        assert doc["num_qubits"] == 2
        assert doc["amplitudes"][0] == [pytest.approx(2**-0.5), 0.0]

    def test_rejects_bad_headers(self):
        doc = state_to_dict(bell())
        for patch in (
            {"format_version": 2},
            {"kind": "operator"},
            {"convention": "q1-lsb"},
            {"num_qubits": 3},
        ):
            broken = {**doc, **patch}
            with pytest.raises(ValueError):
                state_from_dict(broken)
        with pytest.raises(ValueError):
            state_from_dict([1, 2, 3])


class TestOperatorRoundTrip:
    def test_exact_round_trip(self):
        for op in (u_chi(), u_w2()):
            back = operator_from_dict(operator_to_dict(op))
            assert back.arity == op.arity
            assert np.array_equal(back.matrix, op.matrix)

    def test_file_round_trip(self, tmp_path):
        path = tmp_path / "op.json"
        save_operator(u_chi(), path)
        assert np.array_equal(load_operator(path).matrix, u_chi().matrix)

    def test_rejects_shape_mismatch(self):
        doc = operator_to_dict(u_chi())
        doc["arity"] = 1
        with pytest.raises(ValueError):
            operator_from_dict(doc)


class TestOperatorSetRoundTrip:
    def test_gamma_table_round_trip(self, tmp_path):
        ops = gamma_set()
        path = tmp_path / "gamma.json"
        save_operator_set(ops, path)
        back = load_operator_set(path)
        assert back.level == 2
        assert len(back.members) == 16
        for got, want in zip(back.members, ops.members):
            assert np.array_equal(got.matrix, want.matrix)

    def test_level_three_round_trip(self):
        ops = operator_family(3)
        back = operator_set_from_dict(operator_set_to_dict(ops))
        assert len(back.members) == 64
        assert all(
            np.array_equal(a.matrix, b.matrix)
            for a, b in zip(back.members, ops.members)
        )

    def test_kind_mismatch_rejected(self):
        doc = operator_set_to_dict(gamma_set())
        with pytest.raises(ValueError):
            operator_from_dict(doc)
        with pytest.raises(ValueError):
            state_from_dict(doc)


class TestFileFormat:
    def test_dump_is_deterministic(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        save_state(chi(), a)
        save_state(chi(), b)
        assert a.read_text() == b.read_text()

    def test_dump_is_sorted_and_indented(self, tmp_path):
        path = tmp_path / "s.json"
        save_state(bell(), path)
        text = path.read_text()
        assert text.endswith("\n")
        doc = json.loads(text)
        assert list(doc) == sorted(doc)
