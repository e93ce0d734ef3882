from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from irpriority import assessment
from irpriority.assessment import (
    average_capability,
    compare_baseline,
    gap_analysis,
    record_assessment,
    snapshot_from_doc,
    snapshot_to_doc,
)
from irpriority.errors import (
    DuplicateArea,
    InvalidTimestamp,
    MissingArea,
    OutOfRange,
    UnknownLevel,
)
from irpriority.registry import CapabilityArea, canonical_level_name

from conftest import WORKED_ENTRIES


def _entries_from_scores(scores):
    """Canonical-level entries with the given per-area scores, in area order."""
    return [
        {"area": area.display_name, "model": "ISO/IEC 27035", "level": canonical_level_name(s)}
        for area, s in zip(CapabilityArea, scores)
    ]


def test_worked_example_average(worked_snapshot):
    assert [e.score for e in worked_snapshot.entries] == [1, 2, 2, 2, 4, 2, 5]
    assert worked_snapshot.average == Fraction(18, 7)
    assert worked_snapshot.average_display == "2.57"
    assert average_capability(worked_snapshot) == Fraction(18, 7)


def test_all_optimised_average_is_five():
    snap = record_assessment("HQ", "2024-01-01T00:00:00Z", _entries_from_scores([5] * 7))
    assert snap.average == 5


def test_mixed_model_average():
    snap = record_assessment("HQ", "2024-01-01T00:00:00Z", _entries_from_scores([2, 2, 3, 2, 5, 1, 4]))
    assert snap.average == Fraction(19, 7)
    assert snap.average_display == "2.71"


def test_missing_area_rejected():
    with pytest.raises(MissingArea) as err:
        record_assessment("HQ", "2024-01-01T00:00:00Z", WORKED_ENTRIES[:6])
    assert "Information Security Culture" in str(err.value)


def test_duplicate_area_rejected():
    entries = WORKED_ENTRIES + [WORKED_ENTRIES[0]]
    with pytest.raises(DuplicateArea):
        record_assessment("HQ", "2024-01-01T00:00:00Z", entries)


def test_unknown_level_propagates():
    entries = [dict(e) for e in WORKED_ENTRIES]
    entries[0]["level"] = "Quantum"
    with pytest.raises(UnknownLevel):
        record_assessment("HQ", "2024-01-01T00:00:00Z", entries)


def test_invalid_timestamp_rejected():
    with pytest.raises(InvalidTimestamp):
        record_assessment("HQ", "not-a-date", WORKED_ENTRIES)


def test_native_then_canonical_level_resolution():
    # "Proactive" is not a native NIST CSF level; it resolves canonically.
    snap = record_assessment(
        "HQ",
        "2024-01-01T00:00:00Z",
        [
            {"area": "Risk Management", "model": "CMMC", "level": "Ad-hoc"},
            {"area": "Incident Handling", "model": "CMMC", "level": "Reactive"},
            {"area": "Training", "model": "CERT-RMM", "level": "Repeatable"},
            {"area": "Staffing", "model": "ISO/IEC 27035", "level": "Reactive"},
            {"area": "InfoSec Governance", "model": "CERT-RMM", "level": "Optimised"},
            {"area": "Communication", "model": "ENISA IM3", "level": "Ad-hoc"},
            {"area": "InfoSec Culture", "model": "NIST CSF", "level": "Proactive"},
        ],
    )
    # CMMC Ad-hoc is native and scores 1; CERT-RMM "Repeatable" is canonical 3.
    assert [e.score for e in snap.entries] == [1, 2, 3, 2, 5, 1, 4]


def test_snapshot_doc_round_trip(worked_snapshot):
    doc = snapshot_to_doc(worked_snapshot)
    restored = snapshot_from_doc(doc)
    assert restored.average == worked_snapshot.average
    assert [e.score for e in restored.entries] == [e.score for e in worked_snapshot.entries]
    assert restored.org_unit == worked_snapshot.org_unit
    assert restored.taken_at == worked_snapshot.taken_at


def test_gap_analysis_default_targets(worked_snapshot):
    report = gap_analysis(worked_snapshot)
    rows = [(e.area, e.gap) for e in report.entries]
    assert rows == [
        (CapabilityArea.RISK_MANAGEMENT, 3),
        (CapabilityArea.INCIDENT_HANDLING_BEST_PRACTICES, 2),
        (CapabilityArea.TRAINING_AND_AWARENESS, 2),
        (CapabilityArea.ADEQUATE_STAFFING, 2),
        (CapabilityArea.INTERNAL_AND_EXTERNAL_COMMUNICATION, 2),
        (CapabilityArea.INFORMATION_SECURITY_GOVERNANCE, 0),
        (CapabilityArea.INFORMATION_SECURITY_CULTURE, -1),
    ]
    assert report.entries[-1].met
    assert report.entries[-2].met
    assert not report.entries[0].met


def test_gap_analysis_targets_equal_scores(worked_snapshot):
    targets = {e.area: e.score for e in worked_snapshot.entries}
    report = gap_analysis(worked_snapshot, targets)
    assert all(e.gap == 0 for e in report.entries)


def test_gap_analysis_extremes():
    snap = record_assessment("HQ", "2024-01-01T00:00:00Z", _entries_from_scores([1] * 7))
    report = gap_analysis(snap, {a: 5 for a in CapabilityArea})
    assert all(e.gap == 4 for e in report.entries)


def test_gap_analysis_rejects_bad_target(worked_snapshot):
    with pytest.raises(OutOfRange):
        gap_analysis(worked_snapshot, {CapabilityArea.RISK_MANAGEMENT: 6})


def test_gap_ordering_is_permutation_and_stable(worked_snapshot):
    first = gap_analysis(worked_snapshot)
    second = gap_analysis(worked_snapshot)
    assert first.entries == second.entries
    assert sorted(e.area.order for e in first.entries) == list(range(7))


def test_compare_baseline_worked_example(worked_snapshot):
    raised = [dict(e) for e in WORKED_ENTRIES]
    raised[5]["level"] = "Proactive"  # communication 2 -> 4
    new = record_assessment("HQ", "2024-09-01T09:00:00Z", raised)
    delta = compare_baseline(worked_snapshot, new)
    assert delta.deltas[CapabilityArea.INTERNAL_AND_EXTERNAL_COMMUNICATION] == 2
    assert delta.average_delta == Fraction(2, 7)
    assert not delta.org_unit_mismatch


def test_compare_baseline_identity(worked_snapshot):
    delta = compare_baseline(worked_snapshot, worked_snapshot)
    assert all(d == 0 for d in delta.deltas.values())
    assert delta.average_delta == 0


def test_compare_baseline_flags_org_mismatch(worked_snapshot):
    other = record_assessment("Branch", "2024-01-01T00:00:00Z", WORKED_ENTRIES)
    assert compare_baseline(worked_snapshot, other).org_unit_mismatch


@given(
    a=st.lists(st.integers(1, 5), min_size=7, max_size=7),
    b=st.lists(st.integers(1, 5), min_size=7, max_size=7),
)
def test_compare_baseline_antisymmetric(a, b):
    snap_a = record_assessment("HQ", "2024-01-01T00:00:00Z", _entries_from_scores(a))
    snap_b = record_assessment("HQ", "2024-02-01T00:00:00Z", _entries_from_scores(b))
    fwd = compare_baseline(snap_a, snap_b)
    rev = compare_baseline(snap_b, snap_a)
    assert fwd.average_delta == -rev.average_delta
    assert all(fwd.deltas[area] == -rev.deltas[area] for area in CapabilityArea)


@given(scores=st.lists(st.integers(1, 5), min_size=7, max_size=7))
def test_average_bounds(scores):
    snap = record_assessment("HQ", "2024-01-01T00:00:00Z", _entries_from_scores(scores))
    assert 1 <= snap.average <= 5
    assert (snap.average == 1) == all(s == 1 for s in scores)
    assert (snap.average == 5) == all(s == 5 for s in scores)


def test_record_assessment_persists_and_rereads(store):
    snap = record_assessment("HQ", "2024-03-01T09:00:00Z", WORKED_ENTRIES, store=store)
    restored = snapshot_from_doc(store.load("snapshot", snap.id))
    assert restored.average == snap.average
    assert [e.score for e in restored.entries] == [e.score for e in snap.entries]
