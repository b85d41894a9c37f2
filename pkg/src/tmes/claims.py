"""Executable verification suite for the documented properties of the state
and operator catalog.

Each claim checks one documented assertion and yields a verdict: ``pass`` or
``fail`` for assertions with a definite expected outcome, ``recorded`` for
measurements that are reported as evidence rather than asserted (the two
construction ambiguities and the independence ranks of the larger operator
families).  Reports are deterministic given the configuration.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from typing import Callable

import numpy as np

from .capacity import (
    XOR4,
    build_sdc_codebook,
    build_teleport_protocol,
    haar_random_state,
    haar_random_unitary,
    is_tmes,
    pauli_digits,
    sdc_max_messages,
    sdc_orthogonal_labels,
    simulate_sdc,
    simulate_teleportation,
    teleport_capacity,
)
from .invariants import (
    all_bipartitions,
    conversion_obstruction,
    genuine_multipartite,
    orthogonal_family,
)
from .operators import (
    cnot,
    find_realizing_application,
    gamma_set,
    independence_rank,
    operator_family,
    pauli_set,
    pauli_string,
    sigma,
    u_chi,
    u_w2,
)
from .serialize import (
    operator_set_from_dict,
    operator_set_to_dict,
    operator_to_dict,
    operator_from_dict,
    state_from_dict,
    state_to_dict,
)
from .states import (
    basis_state,
    bell,
    bell_product,
    chi,
    cluster4,
    cluster5,
    ghz,
    hs,
    odd_resource,
    omega,
    w_state,
)
from .statevec import (
    LocalOperator,
    Partition,
    apply_local,
    entropy,
    negativity,
    overlap,
    partial_trace,
    schmidt_spectrum,
    states_close,
    tensor,
)


@dataclass(frozen=True)
class ClaimConfig:
    """Knobs for the claim suite; defaults reproduce the reference run."""

    tolerance: float = 1e-9
    seed: int = 0
    payload_trials: int = 20
    invariance_trials: int = 50
    claim_ids: tuple[str, ...] | None = None


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    anchor: str
    verdict: str
    detail: str
    data: dict


_REGISTRY: dict[str, tuple[str, Callable[[ClaimConfig], tuple[str, str, dict]]]] = {}

# Claims whose verdict is evidence rather than an assertion.
RECORDED_CLAIMS = frozenset(
    {
        "chi-construction-discrepancy",
        "w2-construction-unrealizable",
        "family-rank-level-3",
        "family-rank-level-4",
    }
)


def _register(claim_id: str, anchor: str):
    def wrap(fn):
        if claim_id in _REGISTRY:
            raise ValueError(f"duplicate claim id {claim_id}")
        _REGISTRY[claim_id] = (anchor, fn)
        return fn

    return wrap


def claim_ids() -> tuple[str, ...]:
    return tuple(sorted(_REGISTRY))


def _finish(bad: list[str], ok_detail: str, data: dict) -> tuple[str, str, dict]:
    if bad:
        return "fail", "; ".join(bad), data
    return "pass", ok_detail, data


def _cut(sender, n: int) -> Partition:
    return Partition.from_sender(sender, n)


def _cut_doc(cut: Partition) -> dict:
    return {"sender": sorted(cut.sender), "receiver": sorted(cut.receiver)}


def _spec_doc(spectrum) -> list[float]:
    return [float(x) for x in spectrum.eigenvalues]


def _spectrum_close(spectrum, expected, tol: float) -> bool:
    vals = np.asarray(spectrum.eigenvalues)
    exp = np.asarray(expected, dtype=float)
    return vals.shape == exp.shape and bool(np.max(np.abs(vals - exp)) <= tol)


HALF = (0.5, 0.5)
QUARTER4 = (0.25, 0.25, 0.25, 0.25)
BALANCED_PHASE_SPEC = (0.5, 1 / 6, 1 / 6, 1 / 6)


def _check_spectra(state, cases, tol):
    """cases: (sender tuple, expected spectrum) pairs; returns (bad, data)."""
    bad = []
    data = {}
    n = state.num_qubits
    for sender, expected in cases:
        spec = schmidt_spectrum(state, _cut(sender, n))
        key = ",".join(str(q) for q in sender)
        data[key] = _spec_doc(spec)
        if not _spectrum_close(spec, expected, tol):
            bad.append(f"cut {sender}: got {data[key]}, expected {list(expected)}")
    return bad, data


# ---------------------------------------------------------------------------
# catalog states


@_register("bell-catalog", "The four Bell pairs are orthonormal and match their printed amplitudes.")
def _bell_catalog(config: ClaimConfig):
    r = 1 / np.sqrt(2.0)
    printed = {
        "phi+": (r, 0, 0, r),
        "phi-": (r, 0, 0, -r),
        "psi+": (0, r, r, 0),
        "psi-": (0, r, -r, 0),
    }
    bad = []
    states = {}
    for kind, amps in printed.items():
        states[kind] = bell(kind)
        if np.max(np.abs(states[kind].amplitudes - np.array(amps))) > config.tolerance:
            bad.append(f"{kind} amplitudes differ from the printed form")
    kinds = list(printed)
    worst = 0.0
    for i, a in enumerate(kinds):
        for b in kinds[i + 1 :]:
            worst = max(worst, abs(overlap(states[a], states[b])))
    if worst > config.tolerance:
        bad.append(f"pairs are not mutually orthogonal (worst overlap {worst:.2e})")
    return _finish(bad, "printed amplitudes confirmed, pairwise orthogonal", {"worst_overlap": worst})


@_register("spectra-ghz", "Every bipartition of a GHZ state carries the two-level spectrum {1/2, 1/2}.")
def _spectra_ghz(config: ClaimConfig):
    bad = []
    data = {}
    total = 0
    for n in (3, 4, 5):
        state = ghz(n)
        for cut in all_bipartitions(n):
            spec = schmidt_spectrum(state, cut)
            if not _spectrum_close(spec, HALF, config.tolerance):
                bad.append(f"ghz{n} cut {sorted(cut.sender)}: {_spec_doc(spec)}")
        data[f"ghz{n}_cuts"] = len(all_bipartitions(n))
        total += data[f"ghz{n}_cuts"]
    return _finish(bad, f"all {total} bipartitions across n=3,4,5 give {{1/2, 1/2}}", data)


@_register("spectra-cluster", "Cluster states are rank four and flat across the odd/even cut, rank two across neighbor cuts.")
def _spectra_cluster(config: ClaimConfig):
    bad4, data4 = _check_spectra(
        cluster4(), [((1, 3), QUARTER4), ((1, 2), HALF), ((1,), HALF)], config.tolerance
    )
    bad5, data5 = _check_spectra(
        cluster5(), [((1, 3, 5), QUARTER4), ((1,), HALF)], config.tolerance
    )
    return _finish(bad4 + bad5, "odd/even cuts flat at 1/4, edge cuts at 1/2", {"cluster4": data4, "cluster5": data5})


@_register("spectra-chi-omega", "The four-term and eight-term phase states are flat on two of the three balanced cuts and rank two on the third.")
def _spectra_chi_omega(config: ClaimConfig):
    cases = [((1, 2), QUARTER4), ((1, 3), QUARTER4), ((1, 4), HALF)]
    bad_c, data_c = _check_spectra(chi(), cases, config.tolerance)
    bad_o, data_o = _check_spectra(omega(), cases, config.tolerance)
    return _finish(
        bad_c + bad_o,
        "both states: flat across {1,2} and {1,3}, two-level across {1,4}",
        {"chi": data_c, "omega": data_o},
    )


@_register("spectra-hs", "The six-term phase state has the same spectrum {1/2, 1/6, 1/6, 1/6} on every balanced cut.")
def _spectra_hs(config: ClaimConfig):
    cases = [((1, 2), BALANCED_PHASE_SPEC), ((1, 3), BALANCED_PHASE_SPEC), ((1, 4), BALANCED_PHASE_SPEC)]
    bad, data = _check_spectra(hs(), cases, config.tolerance)
    ent = entropy(schmidt_spectrum(hs(), _cut((1, 2), 4)))
    data["balanced_entropy"] = float(ent)
    if abs(ent - 1.79248125036058) > 1e-9:
        bad.append(f"balanced-cut entropy {ent} differs from 1.79248125036058")
    return _finish(bad, "all three balanced cuts agree, entropy 1.7925 bits", data)


@_register("spectra-w2", "The weighted three-qubit superposition has single-qubit spectra {5/6,1/6}, {2/3,1/3}, {1/2,1/2}.")
def _spectra_w2(config: ClaimConfig):
    cases = [
        ((1,), (5 / 6, 1 / 6)),
        ((2,), (2 / 3, 1 / 3)),
        ((3,), HALF),
    ]
    bad, data = _check_spectra(w_state(2), cases, config.tolerance)
    return _finish(bad, "qubit spectra match the closed forms", data)


@_register("spectra-products", "Bell-pair products are flat across interleaved cuts and rank one across the pairing cut.")
def _spectra_products(config: ClaimConfig):
    bad2, data2 = _check_spectra(
        bell_product(2), [((1, 3), QUARTER4), ((1, 2), (1.0,))], config.tolerance
    )
    bad1, data1 = _check_spectra(odd_resource(1), [((1, 3), HALF), ((3,), (1.0,))], config.tolerance)
    bad3, data3 = _check_spectra(odd_resource(2), [((1, 3, 5), QUARTER4), ((5,), (1.0,))], config.tolerance)
    return _finish(
        bad2 + bad1 + bad3,
        "interleaved cuts flat, pairing cuts rank one",
        {"bell_product2": data2, "odd1": data1, "odd2": data3},
    )


@_register("uniform-marginals", "GHZ single-qubit marginals and the flat two-qubit marginals of the four-qubit catalog states are maximally mixed.")
def _uniform_marginals(config: ClaimConfig):
    bad = []
    data = {}

    def check(label, state, keep):
        rho = partial_trace(state, keep).matrix
        dev = float(np.max(np.abs(rho - np.eye(rho.shape[0]) / rho.shape[0])))
        data[label] = dev
        if dev > config.tolerance:
            bad.append(f"{label}: deviation {dev:.2e}")

    for n in (3, 4, 5):
        for q in range(1, n + 1):
            check(f"ghz{n}_q{q}", ghz(n), (q,))
    check("chi_12", chi(), (1, 2))
    check("chi_13", chi(), (1, 3))
    check("omega_13", omega(), (1, 3))
    check("omega_24", omega(), (2, 4))
    check("cluster4_13", cluster4(), (1, 3))
    return _finish(bad, "all listed marginals are maximally mixed", data)


# ---------------------------------------------------------------------------
# constructions


@_register("construct-ghz3", "A controlled flip at (1, 3) turns a Bell pair plus ancilla into the three-qubit GHZ state.")
def _construct_ghz3(config: ClaimConfig):
    src = tensor(bell(), basis_state("0"))
    out = apply_local(src, cnot(), (1, 3))
    ok = states_close(out, ghz(3), config.tolerance)
    dev = float(np.max(np.abs(out.amplitudes - ghz(3).amplitudes)))
    return _finish([] if ok else [f"amplitude deviation {dev:.2e}"], "identity holds exactly", {"deviation": dev})


@_register("construct-cluster4", "A controlled flip at (1, 3) turns two interleaved Bell pairs into the four-qubit cluster state.")
def _construct_cluster4(config: ClaimConfig):
    out = apply_local(bell_product(2), cnot(), (1, 3))
    dev = float(np.max(np.abs(out.amplitudes - cluster4().amplitudes)))
    ok = dev <= config.tolerance
    return _finish([] if ok else [f"amplitude deviation {dev:.2e}"], "identity holds exactly", {"deviation": dev})


@_register("construct-cluster5", "Controlled flips at (1, 3) then (3, 5) turn two Bell pairs plus ancilla into the five-qubit cluster state.")
def _construct_cluster5(config: ClaimConfig):
    mid = apply_local(odd_resource(2), cnot(), (1, 3))
    out = apply_local(mid, cnot(), (3, 5))
    dev = float(np.max(np.abs(out.amplitudes - cluster5().amplitudes)))
    ok = dev <= config.tolerance
    return _finish([] if ok else [f"amplitude deviation {dev:.2e}"], "identity holds exactly", {"deviation": dev})


# ---------------------------------------------------------------------------
# per-state operational profiles


def _tmes_doc(verdict) -> dict:
    return {
        "is_tmes": verdict.is_tmes,
        "teleport_qubits": verdict.teleport_qubits,
        "sdc_messages": verdict.sdc_messages,
        "witness": _cut_doc(verdict.witnessing_partition)
        if verdict.witnessing_partition is not None
        else None,
    }


@_register("bell-maximal", "A Bell pair teleports one qubit and carries four messages: maximal on two qubits.")
def _bell_maximal(config: ClaimConfig):
    state = bell()
    bad = []
    cap = teleport_capacity(state, _cut((1,), 2))
    msgs = sdc_max_messages(state, (1,), config.tolerance)
    verdict = is_tmes(state, config.tolerance)
    if cap != 1:
        bad.append(f"teleport capacity {cap} != 1")
    if msgs != 4:
        bad.append(f"message count {msgs} != 4")
    if not verdict.is_tmes:
        bad.append("maximality test failed")
    return _finish(bad, "capacity 1, messages 4, maximal", {"capacity": cap, "messages": msgs, "tmes": _tmes_doc(verdict)})


@_register("ghz3-maximal", "The three-qubit GHZ state teleports one qubit and carries eight messages through a two-qubit sender.")
def _ghz3_maximal(config: ClaimConfig):
    state = ghz(3)
    bad = []
    cap = teleport_capacity(state, _cut((1, 2), 3))
    msgs = sdc_max_messages(state, (1, 2), config.tolerance)
    verdict = is_tmes(state, config.tolerance)
    if cap != 1:
        bad.append(f"capacity {cap} != 1")
    if msgs != 8:
        bad.append(f"messages {msgs} != 8")
    if not verdict.is_tmes:
        bad.append("maximality test failed")
    return _finish(bad, "capacity 1, messages 8, maximal", {"capacity": cap, "messages": msgs, "tmes": _tmes_doc(verdict)})


@_register("ghz4-not-maximal", "The four-qubit GHZ state misses both thresholds: one teleported qubit and eight messages on every balanced split.")
def _ghz4_not_maximal(config: ClaimConfig):
    state = ghz(4)
    bad = []
    caps = {}
    msgs = {}
    for cut in all_bipartitions(4):
        if len(cut.sender) != 2:
            continue
        key = ",".join(str(q) for q in sorted(cut.sender))
        caps[key] = teleport_capacity(state, cut)
    for sender in ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)):
        msgs[",".join(map(str, sender))] = sdc_max_messages(state, sender, config.tolerance)
    verdict = is_tmes(state, config.tolerance)
    if set(caps.values()) != {1}:
        bad.append(f"balanced capacities {caps} != all 1")
    if max(msgs.values()) != 8:
        bad.append(f"best message count {max(msgs.values())} != 8")
    if verdict.is_tmes:
        bad.append("maximality test unexpectedly passed")
    return _finish(bad, "capacity 1 < 2 and 8 < 16 messages on every split", {"capacities": caps, "messages": msgs, "tmes": _tmes_doc(verdict)})


@_register("ghz5-not-maximal", "The five-qubit GHZ state reaches sixteen messages but only one teleported qubit, so it is not maximal.")
def _ghz5_not_maximal(config: ClaimConfig):
    state = ghz(5)
    bad = []
    verdict = is_tmes(state, config.tolerance)
    if verdict.is_tmes:
        bad.append("maximality test unexpectedly passed")
    if verdict.teleport_qubits != 1:
        bad.append(f"best capacity {verdict.teleport_qubits} != 1")
    if verdict.sdc_messages != 16:
        bad.append(f"best message count {verdict.sdc_messages} != 16")
    return _finish(bad, "best figures 1 qubit and 16 < 32 messages", {"tmes": _tmes_doc(verdict)})


@_register("cluster4-maximal", "The four-qubit cluster state teleports two qubits and carries sixteen messages through the odd pair.")
def _cluster4_maximal(config: ClaimConfig):
    state = cluster4()
    bad = []
    cap_odd = teleport_capacity(state, _cut((1, 3), 4))
    cap_edge = teleport_capacity(state, _cut((1, 2), 4))
    msgs = sdc_max_messages(state, (1, 3), config.tolerance)
    verdict = is_tmes(state, config.tolerance)
    if cap_odd != 2:
        bad.append(f"odd-pair capacity {cap_odd} != 2")
    if cap_edge != 1:
        bad.append(f"edge-pair capacity {cap_edge} != 1")
    if msgs != 16:
        bad.append(f"messages {msgs} != 16")
    if not (verdict.is_tmes and verdict.witnessing_partition == _cut((1, 3), 4)):
        bad.append("maximality witness is not the odd/even split")
    return _finish(
        bad,
        "capacity 2 and 16 messages on the odd/even split",
        {"capacity_odd": cap_odd, "capacity_edge": cap_edge, "messages": msgs, "tmes": _tmes_doc(verdict)},
    )


@_register("cluster5-maximal", "The five-qubit cluster state teleports two qubits and carries thirty-two messages through the odd triple.")
def _cluster5_maximal(config: ClaimConfig):
    state = cluster5()
    bad = []
    cap = teleport_capacity(state, _cut((1, 3, 5), 5))
    msgs = sdc_max_messages(state, (1, 3, 5), config.tolerance)
    verdict = is_tmes(state, config.tolerance)
    if cap != 2:
        bad.append(f"capacity {cap} != 2")
    if msgs != 32:
        bad.append(f"messages {msgs} != 32")
    if not verdict.is_tmes:
        bad.append("maximality test failed")
    return _finish(bad, "capacity 2 and 32 messages on the odd triple", {"capacity": cap, "messages": msgs, "tmes": _tmes_doc(verdict)})


@_register("chi-maximal", "The eight-term phase state is maximal, with the {1,4} split strictly weaker than the other two.")
def _chi_maximal(config: ClaimConfig):
    state = chi()
    bad = []
    caps = {s: teleport_capacity(state, _cut(s, 4)) for s in ((1, 2), (1, 3), (1, 4))}
    msgs = {s: sdc_max_messages(state, s, config.tolerance) for s in ((1, 2), (1, 3), (1, 4))}
    verdict = is_tmes(state, config.tolerance)
    if caps[(1, 2)] != 2 or caps[(1, 3)] != 2 or caps[(1, 4)] != 1:
        bad.append(f"capacities {caps} != (2, 2, 1)")
    if msgs[(1, 2)] != 16 or msgs[(1, 3)] != 16:
        bad.append(f"messages {msgs} missing 16 on a flat split")
    if msgs[(1, 4)] >= 16:
        bad.append(f"messages {msgs[(1, 4)]} on the weak split should be below 16")
    if not verdict.is_tmes:
        bad.append("maximality test failed")
    data = {
        "capacities": {",".join(map(str, k)): v for k, v in caps.items()},
        "messages": {",".join(map(str, k)): v for k, v in msgs.items()},
        "tmes": _tmes_doc(verdict),
    }
    return _finish(bad, "maximal through {1,2} and {1,3}; {1,4} falls short", data)


@_register("omega-maximal", "The four-term phase state is maximal, with the {1,4} split strictly weaker than the other two.")
def _omega_maximal(config: ClaimConfig):
    state = omega()
    bad = []
    caps = {s: teleport_capacity(state, _cut(s, 4)) for s in ((1, 2), (1, 3), (1, 4))}
    msgs = {s: sdc_max_messages(state, s, config.tolerance) for s in ((1, 3), (2, 4))}
    verdict = is_tmes(state, config.tolerance)
    if caps[(1, 2)] != 2 or caps[(1, 3)] != 2 or caps[(1, 4)] != 1:
        bad.append(f"capacities {caps} != (2, 2, 1)")
    if set(msgs.values()) != {16}:
        bad.append(f"messages {msgs} != 16 on the flat splits")
    if not verdict.is_tmes:
        bad.append("maximality test failed")
    data = {
        "capacities": {",".join(map(str, k)): v for k, v in caps.items()},
        "messages": {",".join(map(str, k)): v for k, v in msgs.items()},
        "tmes": _tmes_doc(verdict),
    }
    return _finish(bad, "maximal through {1,2} and {1,3}; {1,4} falls short", data)


@_register("hs-not-maximal", "The six-term phase state teleports nothing across any balanced cut and stays below sixteen messages.")
def _hs_not_maximal(config: ClaimConfig):
    state = hs()
    bad = []
    caps = {}
    msgs = {}
    for sender in ((1, 2), (1, 3), (1, 4)):
        key = ",".join(map(str, sender))
        caps[key] = teleport_capacity(state, _cut(sender, 4))
        msgs[key] = sdc_max_messages(state, sender, config.tolerance)
    verdict = is_tmes(state, config.tolerance)
    if set(caps.values()) != {0}:
        bad.append(f"balanced capacities {caps} != all 0")
    if max(msgs.values()) >= 16:
        bad.append(f"message count {msgs} reaches 16")
    if verdict.is_tmes:
        bad.append("maximality test unexpectedly passed")
    return _finish(bad, "capacity 0 everywhere; messages stay below 16", {"capacities": caps, "messages": msgs, "tmes": _tmes_doc(verdict)})


@_register("w2-maximal", "The weighted three-qubit superposition is maximal through the {1,2} sender but not through every pair.")
def _w2_maximal(config: ClaimConfig):
    state = w_state(2)
    bad = []
    caps = {}
    msgs = {}
    for sender in ((1, 2), (1, 3), (2, 3)):
        key = ",".join(map(str, sender))
        caps[key] = teleport_capacity(state, _cut(sender, 3))
        msgs[key] = sdc_max_messages(state, sender, config.tolerance)
    verdict = is_tmes(state, config.tolerance)
    if caps["1,2"] != 1:
        bad.append(f"capacity through (1, 2) is {caps['1,2']} != 1")
    if msgs["1,2"] != 8:
        bad.append(f"messages through (1, 2) are {msgs['1,2']} != 8")
    if min(msgs.values()) >= 8:
        bad.append("every pair reaches 8 messages; expected at least one to fall short")
    if not verdict.is_tmes:
        bad.append("maximality test failed")
    return _finish(
        bad,
        "maximal through (1, 2); other pairs fall short of 8 messages",
        {"capacities": caps, "messages": msgs, "tmes": _tmes_doc(verdict)},
    )


@_register("bell-product-maximal", "Two interleaved Bell pairs pass the maximality test despite being biseparable.")
def _bell_product_maximal(config: ClaimConfig):
    state = bell_product(2)
    bad = []
    cap = teleport_capacity(state, _cut((1, 3), 4))
    msgs = sdc_max_messages(state, (1, 3), config.tolerance)
    verdict = is_tmes(state, config.tolerance)
    gme = genuine_multipartite(state, config.tolerance)
    if cap != 2:
        bad.append(f"capacity {cap} != 2")
    if msgs != 16:
        bad.append(f"messages {msgs} != 16")
    if not verdict.is_tmes:
        bad.append("maximality test failed")
    if gme:
        bad.append("product state reported as genuinely multipartite")
    return _finish(
        bad,
        "capacity 2, 16 messages, yet biseparable across the pairing cut",
        {"capacity": cap, "messages": msgs, "genuine_multipartite": gme, "tmes": _tmes_doc(verdict)},
    )


@_register("odd-resource-maximal", "Bell pairs plus a single ancilla qubit are maximal on odd qubit counts.")
def _odd_resource_maximal(config: ClaimConfig):
    bad = []
    data = {}
    for pairs, sender, cap_want, msg_want in ((1, (1, 3), 1, 8), (2, (1, 3, 5), 2, 32)):
        state = odd_resource(pairs)
        cap = teleport_capacity(state, _cut(sender, state.num_qubits))
        msgs = sdc_max_messages(state, sender, config.tolerance)
        verdict = is_tmes(state, config.tolerance)
        data[f"n{state.num_qubits}"] = {
            "capacity": cap,
            "messages": msgs,
            "tmes": _tmes_doc(verdict),
        }
        if cap != cap_want:
            bad.append(f"n={state.num_qubits}: capacity {cap} != {cap_want}")
        if msgs != msg_want:
            bad.append(f"n={state.num_qubits}: messages {msgs} != {msg_want}")
        if not verdict.is_tmes:
            bad.append(f"n={state.num_qubits}: maximality test failed")
    return _finish(bad, "three- and five-qubit resources both maximal", data)


@_register("basis-not-maximal", "Computational basis states fail the maximality test and carry only the classical message count.")
def _basis_not_maximal(config: ClaimConfig):
    bad = []
    two = basis_state("00")
    four = basis_state("0000")
    msgs_two = sdc_max_messages(two, (1,), config.tolerance)
    msgs_four = sdc_max_messages(four, (1, 3), config.tolerance)
    cap_four = teleport_capacity(four, _cut((1, 3), 4))
    v_two = is_tmes(two, config.tolerance)
    v_four = is_tmes(four, config.tolerance)
    if msgs_two != 2:
        bad.append(f"single-qubit sender yields {msgs_two} != 2 messages")
    if msgs_four != 4:
        bad.append(f"two-qubit sender yields {msgs_four} != 4 messages")
    if cap_four != 0:
        bad.append(f"capacity {cap_four} != 0")
    if v_two.is_tmes or v_four.is_tmes:
        bad.append("a basis state passed the maximality test")
    return _finish(
        bad,
        "message counts collapse to the classical values; no teleportation",
        {"messages_2q": msgs_two, "messages_4q": msgs_four, "capacity_4q": cap_four},
    )


# ---------------------------------------------------------------------------
# protocol simulations


def _teleport_trials(state, sender, n_payload, config):
    """Run seeded payload trials; returns (bad, data)."""
    cut = _cut(sender, state.num_qubits)
    bad = []
    worst_fid = 1.0
    worst_prob_dev = 0.0
    worst_total_dev = 0.0
    count = None
    for t in range(config.payload_trials):
        res = simulate_teleportation(state, cut, haar_random_state(n_payload, config.seed + t))
        count = len(res.outcomes)
        uniform = 1.0 / count
        worst_fid = min(worst_fid, res.min_fidelity)
        worst_prob_dev = max(
            worst_prob_dev, max(abs(o.probability - uniform) for o in res.outcomes)
        )
        worst_total_dev = max(worst_total_dev, abs(res.total_probability - 1.0))
    if worst_fid < 1.0 - config.tolerance:
        bad.append(f"worst fidelity {worst_fid} below 1")
    if worst_prob_dev > config.tolerance:
        bad.append(f"outcome probabilities deviate from uniform by {worst_prob_dev:.2e}")
    if worst_total_dev > config.tolerance:
        bad.append(f"total probability off by {worst_total_dev:.2e}")
    data = {
        "outcomes": count,
        "trials": config.payload_trials,
        "worst_fidelity": worst_fid,
        "worst_probability_deviation": worst_prob_dev,
    }
    return bad, data


@_register("teleport-bell", "A Bell pair teleports arbitrary single-qubit payloads perfectly with four uniform outcomes.")
def _teleport_bell(config: ClaimConfig):
    bad, data = _teleport_trials(bell(), (1,), 1, config)
    if not bad and data["outcomes"] != 4:
        bad.append(f"outcome count {data['outcomes']} != 4")
    return _finish(bad, "unit fidelity across seeded payloads, uniform 1/4 outcomes", data)


@_register("teleport-cluster4", "The four-qubit cluster state teleports arbitrary two-qubit payloads through the odd pair with sixteen uniform outcomes.")
def _teleport_cluster4(config: ClaimConfig):
    bad, data = _teleport_trials(cluster4(), (1, 3), 2, config)
    if not bad and data["outcomes"] != 16:
        bad.append(f"outcome count {data['outcomes']} != 16")
    return _finish(bad, "unit fidelity across seeded payloads, uniform 1/16 outcomes", data)


@_register("teleport-cluster5", "The five-qubit cluster state teleports arbitrary two-qubit payloads through the odd triple with sixteen uniform outcomes.")
def _teleport_cluster5(config: ClaimConfig):
    bad, data = _teleport_trials(cluster5(), (1, 3, 5), 2, config)
    if not bad and data["outcomes"] != 16:
        bad.append(f"outcome count {data['outcomes']} != 16")
    return _finish(bad, "unit fidelity across seeded payloads, uniform 1/16 outcomes", data)


@_register("teleport-below-capacity", "Resources with spare capacity still teleport smaller payloads perfectly.")
def _teleport_below_capacity(config: ClaimConfig):
    bad = []
    data = {}
    for label, state, sender, n_payload, count in (
        ("cluster4_p1", cluster4(), (1, 3), 1, 8),
        ("cluster5_p1", cluster5(), (1, 3, 5), 1, 8),
        ("ghz4_single_sender", ghz(4), (1,), 1, 4),
        ("ghz5_pair_sender", ghz(5), (1, 2), 1, 4),
    ):
        case_bad, case_data = _teleport_trials(state, sender, n_payload, config)
        if not case_bad and case_data["outcomes"] != count:
            case_bad.append(f"outcome count {case_data['outcomes']} != {count}")
        bad.extend(f"{label}: {b}" for b in case_bad)
        data[label] = case_data
    return _finish(bad, "one-qubit payloads ride four resources at unit fidelity", data)


@_register("teleport-rejects-insufficient", "Protocol construction refuses payloads beyond the spectral capacity.")
def _teleport_rejects(config: ClaimConfig):
    attempts = (
        ("ghz4_payload2", ghz(4), (1, 3), 2),
        ("hs_payload1", hs(), (1, 2), 1),
        ("w2_weak_pair", w_state(2), (1, 3), 1),
        ("bell_payload2", bell(), (1,), 2),
    )
    bad = []
    data = {}
    for label, state, sender, n_payload in attempts:
        try:
            build_teleport_protocol(state, _cut(sender, state.num_qubits), n_payload)
        except ValueError as err:
            data[label] = str(err)
        else:
            bad.append(f"{label}: construction unexpectedly succeeded")
            data[label] = None
    return _finish(bad, "all four over-capacity requests rejected", data)


@_register("protocol-structure", "The cluster-state protocol exposes sixteen orthonormal measurement states with uniform outcome weights and unitary corrections.")
def _protocol_structure(config: ClaimConfig):
    proto = build_teleport_protocol(cluster4(), _cut((1, 3), 4), 2)
    bad = []
    if len(proto.measurement_family) != 16:
        bad.append(f"family size {len(proto.measurement_family)} != 16")
    stack = np.stack([m.amplitudes for m in proto.measurement_family])
    gram_dev = float(np.max(np.abs(stack.conj() @ stack.T - np.eye(len(proto.measurement_family)))))
    if gram_dev > config.tolerance:
        bad.append(f"measurement family departs orthonormality by {gram_dev:.2e}")
    prob_dev = float(max(abs(p - 1 / 16) for p in proto.probabilities))
    if prob_dev > config.tolerance:
        bad.append(f"outcome weights deviate from 1/16 by {prob_dev:.2e}")
    if any(c.arity != 2 or not c.is_unitary(config.tolerance) for c in proto.corrections):
        bad.append("corrections are not two-qubit unitaries")
    if [lab for lab in proto.outcome_labels] != [(q, 0) for q in range(16)]:
        bad.append("outcome labels are not the sixteen Pauli labels")
    data = {"gram_deviation": gram_dev, "probability_deviation": prob_dev}
    return _finish(bad, "sixteen orthonormal measurements, uniform weights, unitary corrections", data)


@_register("sdc-roundtrip", "Every encoded message decodes to itself through the maximal codebooks of the catalog resources.")
def _sdc_roundtrip(config: ClaimConfig):
    cases = (
        ("bell", bell(), (1,), 4),
        ("ghz3", ghz(3), (1, 2), 8),
        ("cluster4", cluster4(), (1, 3), 16),
        ("cluster5", cluster5(), (1, 3, 5), 32),
        ("w2", w_state(2), (1, 2), 8),
        ("odd1", odd_resource(1), (1, 3), 8),
    )
    bad = []
    data = {}
    for label, state, sender, want in cases:
        book = build_sdc_codebook(state, sender, tol=config.tolerance)
        wrong = [i for i in range(len(book)) if simulate_sdc(state, sender, i, book) != i]
        data[label] = {"messages": len(book), "decode_errors": wrong}
        if len(book) != want:
            bad.append(f"{label}: codebook holds {len(book)} != {want} messages")
        if wrong:
            bad.append(f"{label}: decode errors at {wrong}")
    return _finish(bad, "4, 8, 16, and 32-message codebooks decode perfectly", data)


@_register("sdc-rejects-overflow", "Codebook construction refuses message counts above the attainable maximum.")
def _sdc_rejects(config: ClaimConfig):
    bad = []
    data = {}
    for label, state, sender, ask in (
        ("ghz4_ask16", ghz(4), (1, 3), 16),
        ("hs_ask16", hs(), (1, 2), 16),
        ("basis_ask3", basis_state("00"), (1,), 3),
    ):
        try:
            build_sdc_codebook(state, sender, ask, tol=config.tolerance)
        except ValueError as err:
            data[label] = str(err)
        else:
            bad.append(f"{label}: construction unexpectedly succeeded")
            data[label] = None
    return _finish(bad, "all oversize codebook requests rejected", data)


@_register("sender-unitary-invariance", "Relabeling the cluster-state sender pair by any unitary preserves capacity two and sixteen messages.")
def _sender_invariance(config: ClaimConfig):
    rng = np.random.default_rng(config.seed)
    state = cluster4()
    cut = _cut((1, 3), 4)
    caps = set()
    msgs = set()
    for _ in range(config.invariance_trials):
        u = LocalOperator(2, haar_random_unitary(4, rng))
        moved = apply_local(state, u, (1, 3))
        caps.add(teleport_capacity(moved, cut))
        msgs.add(sdc_max_messages(moved, (1, 3), config.tolerance))
    bad = []
    if caps != {2}:
        bad.append(f"capacities drifted to {sorted(caps)}")
    if msgs != {16}:
        bad.append(f"message counts drifted to {sorted(msgs)}")
    data = {"trials": config.invariance_trials, "capacities": sorted(caps), "messages": sorted(msgs)}
    return _finish(bad, f"{config.invariance_trials} random sender unitaries leave both figures fixed", data)


# ---------------------------------------------------------------------------
# obstructions and constructive searches


def _violations_doc(report) -> list[dict]:
    return [
        {
            "cut": _cut_doc(v.cut),
            "source": _spec_doc(v.source_spectrum),
            "target": _spec_doc(v.target_spectrum),
        }
        for v in report.violated_cuts
    ]


@_register("obstruct-bell-pairs-to-ghz4", "No two-qubit gate on the odd pair can turn interleaved Bell pairs into the four-qubit GHZ state.")
def _obstruct_ghz4(config: ClaimConfig):
    src = bell_product(2)
    tgt = ghz(4)
    report = conversion_obstruction(src, tgt, (1, 3))
    place = find_realizing_application(cnot(), src, tgt, config.tolerance)
    bad = []
    if not report.obstructed:
        bad.append("no spectral obstruction found")
    senders = {tuple(sorted(v.cut.sender)) for v in report.violated_cuts}
    if (1, 3) not in senders:
        bad.append("the odd/even cut is not among the violations")
    if place.found:
        bad.append("a controlled-flip placement unexpectedly realizes the conversion")
    data = {
        "violations": _violations_doc(report),
        "search_best_overlap": place.best_overlap,
        "search_best_placement": list(place.best_placement),
    }
    return _finish(bad, "flat 1/4 spectrum against two-level target certifies impossibility", data)


@_register("obstruct-bell-ancilla-to-w2", "No two-qubit gate anywhere can turn a Bell pair plus ancilla into the weighted three-qubit superposition.")
def _obstruct_w2(config: ClaimConfig):
    src = tensor(bell(), basis_state("0"))
    tgt = w_state(2)
    bad = []
    data = {}
    for pair in ((1, 2), (1, 3), (2, 3)):
        report = conversion_obstruction(src, tgt, pair)
        data[",".join(map(str, pair))] = _violations_doc(report)
        if not report.obstructed:
            bad.append(f"subset {pair} is not obstructed")
    return _finish(bad, "every two-qubit placement hits a spectrum mismatch", data)


@_register("constructive-triples-unobstructed", "The three constructive identities pass the spectral screen and are found by placement search.")
def _constructive_triples(config: ClaimConfig):
    bad = []
    data = {}
    mid = apply_local(odd_resource(2), cnot(), (1, 3))
    cases = (
        ("ghz3", tensor(bell(), basis_state("0")), ghz(3), (1, 3)),
        ("cluster4", bell_product(2), cluster4(), (1, 3)),
        ("cluster5_step1", odd_resource(2), mid, (1, 3)),
        ("cluster5_step2", mid, cluster5(), (3, 5)),
    )
    for label, src, tgt, subset in cases:
        report = conversion_obstruction(src, tgt, subset)
        place = find_realizing_application(cnot(), src, tgt, config.tolerance)
        data[label] = {
            "obstructed": report.obstructed,
            "found": place.found,
            "placement": list(place.placement) if place.placement else None,
        }
        if report.obstructed:
            bad.append(f"{label}: spectral screen unexpectedly fired")
        if not place.found:
            bad.append(f"{label}: placement search failed")
    return _finish(bad, "no obstruction and a realizing placement for every step", data)


@_register("chi-construction-discrepancy", "Applying the dedicated two-qubit generator to interleaved Bell pairs lands near, but not on, the printed eight-term state.")
def _chi_discrepancy(config: ClaimConfig):
    src = bell_product(2)
    tgt = chi()
    produced = apply_local(src, u_chi(), (1, 3))
    ov = overlap(tgt, produced)
    differing = [
        i
        for i in range(16)
        if abs(produced.amplitudes[i] - tgt.amplitudes[i]) > config.tolerance
    ]
    place = find_realizing_application(u_chi(), src, tgt, config.tolerance)
    verdict = is_tmes(produced, config.tolerance)
    data = {
        "overlap_with_target": [float(ov.real), float(ov.imag)],
        "differing_amplitude_indices": differing,
        "produced_is_tmes": verdict.is_tmes,
        "produced_teleport_qubits": verdict.teleport_qubits,
        "produced_sdc_messages": verdict.sdc_messages,
        "search_found": place.found,
        "search_placement": list(place.placement) if place.placement else None,
        "search_best_overlap": place.best_overlap,
        "search_best_placement": list(place.best_placement),
    }
    if place.found:
        where = tuple(place.placement)
        detail = (
            f"the printed placement (1, 3) lands at overlap {abs(ov):.3f} with "
            f"sign flips at indices {differing}; placement {where} realizes the "
            f"printed amplitudes exactly, and the (1, 3) product still passes "
            f"the maximality test"
        )
    else:
        detail = (
            f"overlap with the printed state is {abs(ov):.3f}; amplitudes "
            f"differ at indices {differing}; no placement reaches it exactly, "
            f"yet the produced state passes the maximality test"
        )
    return "recorded", detail, data


@_register("w2-construction-unrealizable", "No placement of the dedicated two-qubit generator turns a Bell pair plus ancilla into the weighted superposition, and spectra show why.")
def _w2_unrealizable(config: ClaimConfig):
    src = tensor(bell(), basis_state("0"))
    tgt = w_state(2)
    place = find_realizing_application(u_w2(), src, tgt, config.tolerance)
    obstructions = {}
    for pair in ((1, 2), (1, 3), (2, 3)):
        report = conversion_obstruction(src, tgt, pair)
        obstructions[",".join(map(str, pair))] = {
            "obstructed": report.obstructed,
            "violations": _violations_doc(report),
        }
    data = {
        "search_found": place.found,
        "search_best_overlap": place.best_overlap,
        "search_best_placement": list(place.best_placement),
        "obstructions": obstructions,
    }
    detail = (
        f"best overlap over all placements is {place.best_overlap:.3f}; every "
        f"two-qubit subset carries a spectral obstruction"
    )
    return "recorded", detail, data


# ---------------------------------------------------------------------------
# operator families


@_register("pauli-base", "Single-qubit relabelings are independent and compose according to the label group.")
def _pauli_base(config: ClaimConfig):
    bad = []
    base = pauli_set()
    rank1 = independence_rank(base.members)
    if rank1 != 4:
        bad.append(f"single-qubit rank {rank1} != 4")
    strings = [pauli_string(pauli_digits(d, 2)) for d in range(16)]
    rank2 = independence_rank(strings)
    if rank2 != 16:
        bad.append(f"two-qubit string rank {rank2} != 16")
    worst = 1.0
    for a in range(4):
        for b in range(4):
            prod = sigma(a).matrix @ sigma(b).matrix
            worst = min(worst, abs(np.trace(sigma(XOR4[a][b]).matrix.conj().T @ prod)) / 2)
    if worst < 1.0 - config.tolerance:
        bad.append(f"label composition broke down (worst witness {worst})")
    data = {"rank_singles": rank1, "rank_pairs": rank2, "composition_witness": worst}
    return _finish(bad, "ranks 4 and 16; products match the label group up to phase", data)


@_register("gamma-certification", "The block construction yields sixteen independent two-qubit unitaries forming an orthogonal basis.")
def _gamma_certification(config: ClaimConfig):
    bad = []
    listed = gamma_set()
    generated = operator_family(2)
    if len(listed.members) != 16 or len(generated.members) != 16:
        bad.append("family size is not 16")
    worst = 0.0
    for a, b in zip(listed.members, generated.members):
        worst = max(worst, float(np.max(np.abs(a.matrix - b.matrix))))
    if worst > 1e-12:
        bad.append(f"generated family departs from the listed one by {worst:.2e}")
    rank = independence_rank(listed.members)
    if rank != 16:
        bad.append(f"independence rank {rank} != 16")
    stack = np.stack([m.matrix.reshape(-1) for m in listed.members])
    gram = stack.conj() @ stack.T
    off = float(np.max(np.abs(gram - np.diag(np.diagonal(gram)))))
    if off > config.tolerance:
        bad.append(f"members are not trace-orthogonal (max overlap {off:.2e})")
    data = {"rank": rank, "listed_vs_generated": worst, "max_trace_overlap": off}
    return _finish(bad, "16 unitaries, rank 16, pairwise trace-orthogonal", data)


@_register("family-rank-level-3", "The recursion yields 64 three-qubit unitaries; their independence rank is recorded.")
def _family_level3(config: ClaimConfig):
    start = time.perf_counter()
    fam = operator_family(3)
    rank = independence_rank(fam.members)
    elapsed = time.perf_counter() - start
    data = {"members": len(fam.members), "rank": rank, "seconds": round(elapsed, 3)}
    return "recorded", f"64 unitaries at arity 3; independence rank {rank}", data


@_register("family-rank-level-4", "The recursion yields 256 four-qubit unitaries; their independence rank is recorded.")
def _family_level4(config: ClaimConfig):
    start = time.perf_counter()
    fam = operator_family(4)
    rank = independence_rank(fam.members)
    elapsed = time.perf_counter() - start
    data = {"members": len(fam.members), "rank": rank, "seconds": round(elapsed, 3)}
    return "recorded", f"256 unitaries at arity 4; independence rank {rank}", data


# ---------------------------------------------------------------------------
# serialization and diagnostics


@_register("serialization-roundtrip", "States and operator families survive a JSON round trip bit for bit.")
def _serialization(config: ClaimConfig):
    bad = []
    states = {
        "bell": bell(),
        "ghz4": ghz(4),
        "omega": omega(),
        "chi": chi(),
        "hs": hs(),
        "w2": w_state(2),
        "cluster4": cluster4(),
        "cluster5": cluster5(),
        "odd2": odd_resource(2),
        "basis01": basis_state("01"),
        "haar3": haar_random_state(3, config.seed),
    }
    for label, state in states.items():
        doc = json.loads(json.dumps(state_to_dict(state)))
        back = state_from_dict(doc)
        if back.num_qubits != state.num_qubits or not np.array_equal(
            back.amplitudes, state.amplitudes
        ):
            bad.append(f"state {label} did not survive the round trip")
    fam = gamma_set()
    fam_back = operator_set_from_dict(json.loads(json.dumps(operator_set_to_dict(fam))))
    if fam_back.level != fam.level or any(
        not np.array_equal(a.matrix, b.matrix)
        for a, b in zip(fam.members, fam_back.members)
    ):
        bad.append("operator family did not survive the round trip")
    op_back = operator_from_dict(json.loads(json.dumps(operator_to_dict(u_chi()))))
    if not np.array_equal(op_back.matrix, u_chi().matrix):
        bad.append("single operator did not survive the round trip")
    return _finish(bad, f"{len(states)} states and the operator family round-trip exactly", {"states": sorted(states)})


@_register("diagnostics", "Entanglement diagnostics reproduce the closed-form entropies, negativities, and multipartiteness verdicts.")
def _diagnostics(config: ClaimConfig):
    bad = []
    data = {}
    e_bell = entropy(schmidt_spectrum(bell(), _cut((1,), 2)))
    data["bell_entropy"] = float(e_bell)
    if abs(e_bell - 1.0) > config.tolerance:
        bad.append(f"Bell entropy {e_bell} != 1")
    e_w2 = entropy(schmidt_spectrum(w_state(2), _cut((1,), 3)))
    data["w2_qubit1_entropy"] = float(e_w2)
    if abs(e_w2 - 0.650022421648354) > 1e-9:
        bad.append(f"weighted-state entropy {e_w2} != 0.650022421648354")
    neg_bell = negativity(bell(), _cut((1,), 2))
    data["bell_negativity"] = float(neg_bell)
    if abs(neg_bell - 0.5) > config.tolerance:
        bad.append(f"Bell negativity {neg_bell} != 1/2")
    neg_ghz4 = negativity(ghz(4), _cut((1, 2), 4))
    data["ghz4_negativity"] = float(neg_ghz4)
    if abs(neg_ghz4 - 0.5) > config.tolerance:
        bad.append(f"GHZ negativity {neg_ghz4} != 1/2")
    gme_true = {"ghz3": ghz(3), "cluster4": cluster4(), "chi": chi(), "omega": omega(), "hs": hs(), "cluster5": cluster5(), "w2": w_state(2)}
    gme_false = {"bell_product2": bell_product(2), "odd1": odd_resource(1), "basis0000": basis_state("0000")}
    for label, state in gme_true.items():
        if not genuine_multipartite(state, config.tolerance):
            bad.append(f"{label} reported as not genuinely multipartite")
    for label, state in gme_false.items():
        if genuine_multipartite(state, config.tolerance):
            bad.append(f"{label} reported as genuinely multipartite")
    data["genuine_multipartite_true"] = sorted(gme_true)
    data["genuine_multipartite_false"] = sorted(gme_false)
    return _finish(bad, "entropies, negativities, and multipartite verdicts all match", data)


@_register("orthogonal-family-witness", "Pauli relabeling families are fully orthogonal exactly when the sender marginal is flat, with the cluster witnesses explicit.")
def _orthogonal_witness(config: ClaimConfig):
    bad = []
    data = {}
    fam4 = orthogonal_family(cluster4(), (1, 3))
    data["cluster4_orthogonal"] = fam4.mutually_orthogonal(config.tolerance)
    if not data["cluster4_orthogonal"]:
        bad.append("cluster4 family on the odd pair is not orthogonal")
    fam5 = orthogonal_family(cluster5(), (1, 3, 5))
    data["cluster5_full_orthogonal"] = fam5.mutually_orthogonal(config.tolerance)
    if data["cluster5_full_orthogonal"]:
        bad.append("64 states cannot be orthogonal in a 32-dimensional space")
    labels = sdc_orthogonal_labels(cluster5(), (1, 3, 5), config.tolerance)
    sub = fam5.gram[np.ix_(labels, labels)]
    off = float(np.max(np.abs(sub - np.diag(np.diagonal(sub)))))
    data["cluster5_witness_size"] = len(labels)
    data["cluster5_witness_max_overlap"] = off
    if len(labels) != 32 or off > config.tolerance:
        bad.append(f"cluster5 witness family of {len(labels)} states has overlap {off:.2e}")
    fam_basis = orthogonal_family(basis_state("00"), (1,))
    mags = np.abs(fam_basis.gram)
    pattern = np.array(
        [[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 1, 0], [1, 0, 0, 1]], dtype=float
    )
    dev = float(np.max(np.abs(mags - pattern)))
    data["basis_gram_deviation"] = dev
    if dev > config.tolerance:
        bad.append(f"basis-state family Gram deviates from the two-class pattern by {dev:.2e}")
    return _finish(bad, "16 orthogonal on cluster4, a 32-state witness on cluster5, two classes on a basis state", data)


def run_claim_suite(config: ClaimConfig | None = None) -> tuple[ClaimReport, ...]:
    """Run the selected claims (default: all) in sorted id order."""
    config = config or ClaimConfig()
    if config.claim_ids is None:
        selected = sorted(_REGISTRY)
    else:
        selected = sorted(set(config.claim_ids))
        unknown = [cid for cid in selected if cid not in _REGISTRY]
        if unknown:
            raise ValueError(f"unknown claim ids: {', '.join(unknown)}")
    reports = []
    for cid in selected:
        anchor, fn = _REGISTRY[cid]
        verdict, detail, data = fn(config)
        reports.append(ClaimReport(cid, anchor, verdict, detail, data))
    return tuple(reports)


def suite_report_doc(
    reports: tuple[ClaimReport, ...],
    config: ClaimConfig,
    generated_at: str | None = None,
) -> dict:
    """JSON-ready document for a suite run.

    Deterministic except for ``generated_at`` (override it to pin the bytes).
    """
    counts = {"pass": 0, "fail": 0, "recorded": 0}
    for r in reports:
        counts[r.verdict] = counts.get(r.verdict, 0) + 1
    stamp = generated_at or datetime.now(timezone.utc).isoformat()
    return {
        "format_version": 1,
        "kind": "claim_suite_report",
        "generated_at": stamp,
        "config": {
            "tolerance": config.tolerance,
            "seed": config.seed,
            "payload_trials": config.payload_trials,
            "invariance_trials": config.invariance_trials,
            "claim_ids": list(config.claim_ids) if config.claim_ids else None,
        },
        "summary": counts,
        "claims": [asdict(r) for r in reports],
    }
