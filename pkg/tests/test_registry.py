import random
from itertools import combinations

import pytest

from irpriority import registry
from irpriority.errors import OutOfRange, UnknownLevel, UnknownRegime
from irpriority.registry import (
    CapabilityArea,
    MaturityModel,
    EFFECTIVENESS_TABLE,
    canonical_level_name,
    canonical_score,
    effectiveness,
    list_models,
    select_best_combination,
    select_for_compliance,
)

# Canonical score per (model, native level), 32 pairs total.
ALIGNMENT_FIXTURE = {
    MaturityModel.C2M2: [
        ("Ad-hoc", 1), ("Initial", 2), ("Repeatable", 3),
        ("Defined", 4), ("Managed", 5), ("Optimised", 5),
    ],
    MaturityModel.CMMC: [
        ("Ad-hoc", 1), ("Reactive", 2), ("Defined", 3),
        ("Managed", 4), ("Optimised", 5),
    ],
    MaturityModel.NIST_CSF: [
        ("Partial", 1), ("Risk Informed", 2), ("Repeatable", 3),
        ("Adaptive", 4), ("Optimised", 5),
    ],
    MaturityModel.CERT_RMM: [
        ("Ad-hoc", 1), ("Initial", 2), ("Managed", 3),
        ("Defined", 4), ("Quantitatively Managed", 5), ("Optimised", 5),
    ],
    MaturityModel.ISO_IEC_27035: [
        ("Ad-hoc", 1), ("Initial", 2), ("Repeatable", 3),
        ("Managed", 4), ("Optimised", 5),
    ],
    MaturityModel.ENISA_IM3: [
        ("Ad-hoc", 1), ("Defined", 2), ("Managed", 3),
        ("Controlled", 4), ("Optimised", 5),
    ],
}

# Per-area 1-5 effectiveness of each model at assessing that area.
EFFECTIVENESS_FIXTURE = {
    MaturityModel.CERT_RMM: (5, 5, 4, 4, 5, 4, 4),
    MaturityModel.ISO_IEC_27035: (4, 5, 3, 3, 4, 4, 3),
    MaturityModel.NIST_CSF: (4, 4, 3, 3, 5, 3, 4),
    MaturityModel.C2M2: (5, 4, 4, 4, 4, 3, 4),
    MaturityModel.CMMC: (4, 4, 4, 3, 5, 3, 4),
    MaturityModel.ENISA_IM3: (3, 4, 5, 4, 4, 5, 4),
}


def test_exactly_seven_areas_in_order():
    assert len(CapabilityArea) == 7
    assert [a.display_name for a in CapabilityArea] == [
        "Risk Management",
        "Incident Handling Best Practices",
        "Training and Awareness",
        "Adequate Staffing",
        "Information Security Governance",
        "Internal and External Communication",
        "Information Security Culture",
    ]


def test_exactly_six_models():
    assert len(MaturityModel) == 6


def test_list_models_ladders():
    descriptors = {d.model: d for d in list_models()}
    assert len(descriptors) == 6
    assert len(descriptors[MaturityModel.C2M2].levels) == 6
    assert descriptors[MaturityModel.C2M2].levels[-1].name == "Optimised"
    assert len(descriptors[MaturityModel.CERT_RMM].levels) == 6
    assert [lv.name for lv in descriptors[MaturityModel.ENISA_IM3].levels] == [
        "Ad-hoc", "Defined", "Managed", "Controlled", "Optimised",
    ]
    for model, descriptor in descriptors.items():
        expected = 6 if model in (MaturityModel.C2M2, MaturityModel.CERT_RMM) else 5
        assert len(descriptor.levels) == expected
        assert [lv.ordinal for lv in descriptor.levels] == list(range(expected))


def test_list_models_is_stable():
    assert list_models() == list_models()


def test_alignment_fixture_all_32_pairs():
    pairs = [(m, name, score) for m, rows in ALIGNMENT_FIXTURE.items() for name, score in rows]
    assert len(pairs) == 32
    for model, name, expected in pairs:
        result = canonical_score(model, name)
        assert result.score == expected, (model, name)
        assert result.name == canonical_level_name(expected)


def test_alignment_monotone_and_surjective():
    for descriptor in list_models():
        scores = [canonical_score(descriptor.model, lv.name).score for lv in descriptor.levels]
        assert scores == sorted(scores)
        assert set(scores) == {1, 2, 3, 4, 5}
        if len(scores) == 5:
            assert scores == [1, 2, 3, 4, 5]


def test_level_name_matching_is_tolerant():
    assert canonical_score(MaturityModel.NIST_CSF, "partial").score == 1
    assert canonical_score(MaturityModel.CMMC, "Ad hoc").score == 1
    assert canonical_score(MaturityModel.NIST_CSF, "risk_informed").score == 2
    assert canonical_score(MaturityModel.CERT_RMM, "QUANTITATIVELY  MANAGED").score == 5


def test_unknown_level_lists_valid_names():
    with pytest.raises(UnknownLevel) as err:
        canonical_score(MaturityModel.ENISA_IM3, "Quantitatively Managed")
    assert "Controlled" in str(err.value)


def test_canonical_level_name():
    assert canonical_level_name(1) == "Ad-hoc"
    assert canonical_level_name(2) == "Reactive"
    assert canonical_level_name(3) == "Repeatable"
    assert canonical_level_name(4) == "Proactive"
    assert canonical_level_name(5) == "Optimised"
    with pytest.raises(OutOfRange):
        canonical_level_name(6)
    with pytest.raises(OutOfRange):
        canonical_level_name(0)


def test_effectiveness_fixture_cell_for_cell():
    for model, row in EFFECTIVENESS_FIXTURE.items():
        for area, expected in zip(CapabilityArea, row):
            assert effectiveness(model, area) == expected, (model, area)
    assert len(EFFECTIVENESS_TABLE) == 42


def test_effectiveness_spot_values():
    assert effectiveness(MaturityModel.CERT_RMM, CapabilityArea.RISK_MANAGEMENT) == 5
    assert effectiveness(MaturityModel.ENISA_IM3, CapabilityArea.TRAINING_AND_AWARENESS) == 5
    assert effectiveness(MaturityModel.ISO_IEC_27035, CapabilityArea.INFORMATION_SECURITY_CULTURE) == 3


def test_select_best_combination_default_table():
    selection = select_best_combination()
    expected = {
        CapabilityArea.RISK_MANAGEMENT: MaturityModel.CERT_RMM,
        CapabilityArea.INCIDENT_HANDLING_BEST_PRACTICES: MaturityModel.CERT_RMM,
        CapabilityArea.TRAINING_AND_AWARENESS: MaturityModel.ENISA_IM3,
        CapabilityArea.ADEQUATE_STAFFING: MaturityModel.CERT_RMM,
        CapabilityArea.INFORMATION_SECURITY_GOVERNANCE: MaturityModel.CERT_RMM,
        CapabilityArea.INTERNAL_AND_EXTERNAL_COMMUNICATION: MaturityModel.ENISA_IM3,
        CapabilityArea.INFORMATION_SECURITY_CULTURE: MaturityModel.CERT_RMM,
    }
    assert dict(selection.assignments) == expected
    assert selection.rationale == "best-combination"


def test_select_best_combination_symmetric_table():
    table = {(m, a): 3 for m in MaturityModel for a in CapabilityArea}
    selection = select_best_combination(table)
    assert set(selection.assignments.values()) == {MaturityModel.C2M2}


def _oracle_best_combination(table):
    """Independent brute force: enumerate every model subset, keep the
    feasible ones of minimum size, break ties by canonical index tuple,
    then assign the first max-attaining subset member per area."""
    models = list(MaturityModel)
    areas = list(CapabilityArea)
    best = {a: max(table[(m, a)] for m in models) for a in areas}
    feasible = []
    for size in range(1, 7):
        for subset in combinations(range(6), size):
            chosen = [models[i] for i in subset]
            if all(any(table[(m, a)] == best[a] for m in chosen) for a in areas):
                feasible.append(subset)
        if feasible:
            break
    winner = [models[i] for i in min(feasible)]
    return {a: next(m for m in winner if table[(m, a)] == best[a]) for a in areas}


def test_select_best_combination_matches_oracle_on_random_tables():
    rng = random.Random(20240301)
    for _ in range(200):
        table = {
            (m, a): rng.randint(1, 5)
            for m in MaturityModel
            for a in CapabilityArea
        }
        selection = select_best_combination(table)
        assert dict(selection.assignments) == _oracle_best_combination(table)
        # every pick attains the column max
        for area, model in selection.assignments.items():
            assert table[(model, area)] == max(table[(m, area)] for m in MaturityModel)


def test_select_for_compliance():
    iso = select_for_compliance("ISO/IEC 27001")
    assert set(iso.assignments.values()) == {MaturityModel.ISO_IEC_27035}
    assert len(iso.assignments) == 7

    dod = select_for_compliance("US DoD / CMMC")
    assert set(dod.assignments.values()) == {MaturityModel.CMMC}

    with pytest.raises(UnknownRegime) as err:
        select_for_compliance("PCI-DSS")
    assert "ISO/IEC 27001" in str(err.value)


def test_registry_doc_shape():
    doc = registry.registry_doc()
    assert len(doc["models"]) == 6
    assert len(doc["areas"]) == 7
    assert len(doc["effectiveness"]) == 42
    assert sum(len(m["levels"]) for m in doc["models"]) == 32
