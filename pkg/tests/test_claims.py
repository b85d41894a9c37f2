"""The claim suite: registry hygiene, verdicts, and report documents."""

from __future__ import annotations

import json

import pytest

from tmes.claims import (
    RECORDED_CLAIMS,
    ClaimConfig,
    claim_ids,
    run_claim_suite,
    suite_report_doc,
)

DETERMINISTIC_SUBSET = (
    "bell-catalog",
    "chi-construction-discrepancy",
    "diagnostics",
    "sdc-roundtrip",
    "teleport-bell",
)


@pytest.fixture(scope="module")
def full_suite():
    return run_claim_suite()


@pytest.fixture(scope="module")
def by_id(full_suite):
    return {r.claim_id: r for r in full_suite}


class TestRegistry:
    def test_ids_sorted_and_unique(self):
        ids = claim_ids()
        assert list(ids) == sorted(set(ids))
        assert len(ids) == 45

    def test_recorded_ids_are_registered(self):
        assert RECORDED_CLAIMS <= set(claim_ids())

    def test_unknown_id_rejected(self):
        with pytest.raises(ValueError, match="unknown claim ids"):
            run_claim_suite(ClaimConfig(claim_ids=("no-such-claim",)))

    def test_subset_selection(self):
        reports = run_claim_suite(ClaimConfig(claim_ids=("bell-catalog",)))
        assert len(reports) == 1
        assert reports[0].claim_id == "bell-catalog"

    def test_loose_tolerance_changes_nothing(self, full_suite):
        # every checked quantity sits far from its threshold
        loose = run_claim_suite(ClaimConfig(tolerance=1e-2))
        assert [(r.claim_id, r.verdict) for r in loose] == [
            (r.claim_id, r.verdict) for r in full_suite
        ]


class TestFullSuite:
    def test_no_failures(self, full_suite):
        failing = [r.claim_id for r in full_suite if r.verdict == "fail"]
        assert failing == []
        assert {r.verdict for r in full_suite} == {"pass", "recorded"}

    def test_recorded_set_is_exact(self, full_suite):
        recorded = {r.claim_id for r in full_suite if r.verdict == "recorded"}
        assert recorded == set(RECORDED_CLAIMS)

    def test_covers_every_registered_claim_in_order(self, full_suite):
        assert tuple(r.claim_id for r in full_suite) == claim_ids()

    def test_every_report_carries_evidence(self, full_suite):
        for r in full_suite:
            assert r.anchor and r.detail
            assert isinstance(r.data, dict)

    def test_deterministic_reruns(self):
        config = ClaimConfig(claim_ids=DETERMINISTIC_SUBSET)
        assert run_claim_suite(config) == run_claim_suite(config)


class TestRecordedEvidence:
    def test_near_miss_construction(self, by_id):
        data = by_id["chi-construction-discrepancy"].data
        assert data["overlap_with_target"][0] == pytest.approx(0.5, abs=1e-9)
        assert data["overlap_with_target"][1] == pytest.approx(0.0, abs=1e-9)
        assert data["differing_amplitude_indices"] == [5, 10]
        assert data["produced_is_tmes"] is True
        assert data["produced_teleport_qubits"] == 2
        assert data["produced_sdc_messages"] == 16
        # the printed placement misses, but the mirrored one hits exactly
        assert data["search_found"]
        assert data["search_placement"] == [2, 4]
        assert data["search_best_overlap"] == pytest.approx(1.0, abs=1e-9)

    def test_unrealizable_construction(self, by_id):
        data = by_id["w2-construction-unrealizable"].data
        assert not data["search_found"]
        assert 0.0 < data["search_best_overlap"] < 1.0 - 1e-9
        assert all(
            entry["obstructed"] for entry in data["obstructions"].values()
        )

    @pytest.mark.parametrize(
        "claim,members",
        [("family-rank-level-3", 64), ("family-rank-level-4", 256)],
    )
    def test_family_ranks_saturate(self, by_id, claim, members):
        data = by_id[claim].data
        assert data["members"] == members
        assert data["rank"] == members
        assert data["seconds"] >= 0.0


class TestReportDocument:
    def test_pinned_timestamp_makes_bytes_reproducible(self, full_suite):
        config = ClaimConfig()
        doc_a = suite_report_doc(full_suite, config, generated_at="run-0")
        doc_b = suite_report_doc(full_suite, config, generated_at="run-0")
        assert json.dumps(doc_a, sort_keys=True) == json.dumps(doc_b, sort_keys=True)

    def test_header_and_summary(self, full_suite):
        doc = suite_report_doc(full_suite, ClaimConfig(), generated_at="t")
        assert doc["format_version"] == 1
        assert doc["kind"] == "claim_suite_report"
        assert doc["generated_at"] == "t"
        assert doc["summary"] == {"pass": 41, "fail": 0, "recorded": 4}
        assert len(doc["claims"]) == 45
        assert doc["config"]["tolerance"] == 1e-9
        assert doc["config"]["claim_ids"] is None

    def test_claims_serialize_to_plain_json(self, full_suite):
        doc = suite_report_doc(full_suite, ClaimConfig(), generated_at="t")
        text = json.dumps(doc)
        back = json.loads(text)
        assert [c["claim_id"] for c in back["claims"]] == list(claim_ids())
