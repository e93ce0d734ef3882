"""Static registry of the six incident-response capability maturity models.

Holds the seven capability areas, each model's native level ladder, the
cross-model canonical 1-5 alignment, the per-area effectiveness comparison,
and model-selection logic (best combination / compliance regime). All data
is compiled-in fixture content; nothing here is user-editable.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, Mapping, Optional

from .errors import OutOfRange, UnknownArea, UnknownLevel, UnknownModel, UnknownRegime


class CapabilityArea(Enum):
    """The seven socio-organisational capability areas, in canonical order."""

    RISK_MANAGEMENT = "Risk Management"
    INCIDENT_HANDLING_BEST_PRACTICES = "Incident Handling Best Practices"
    TRAINING_AND_AWARENESS = "Training and Awareness"
    ADEQUATE_STAFFING = "Adequate Staffing"
    INFORMATION_SECURITY_GOVERNANCE = "Information Security Governance"
    INTERNAL_AND_EXTERNAL_COMMUNICATION = "Internal and External Communication"
    INFORMATION_SECURITY_CULTURE = "Information Security Culture"

    @property
    def display_name(self) -> str:
        return self.value

    @property
    def order(self) -> int:
        return list(CapabilityArea).index(self)


class MaturityModel(Enum):
    """The six capability maturity models covered by the registry."""

    C2M2 = ("C2M2", "Cybersecurity Capability Maturity Model")
    CMMC = ("CMMC", "Cybersecurity Maturity Model Certification")
    NIST_CSF = ("NIST CSF", "NIST Cybersecurity Framework")
    CERT_RMM = ("CERT-RMM", "CERT Resilience Management Model")
    ISO_IEC_27035 = ("ISO/IEC 27035", "ISO/IEC 27035 incident management standard")
    ENISA_IM3 = ("ENISA IM3", "ENISA Incident Management Maturity Model")

    @property
    def display_name(self) -> str:
        return self.value[0]

    @property
    def description(self) -> str:
        return self.value[1]

    @property
    def order(self) -> int:
        return list(MaturityModel).index(self)


@dataclass(frozen=True)
class NativeLevel:
    """One rung of a model's native maturity ladder."""

    model: MaturityModel
    name: str
    ordinal: int  # 0-based, ascending maturity


@dataclass(frozen=True)
class CanonicalScore:
    """The aligned 1-5 capability score shared across models."""

    score: int
    name: str


@dataclass(frozen=True)
class ModelDescriptor:
    model: MaturityModel
    display_name: str
    description: str
    levels: tuple[NativeLevel, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class CmmSelection:
    """A per-area choice of maturity model plus the reason for it."""

    assignments: Mapping[CapabilityArea, MaturityModel]
    rationale: str


CANONICAL_LEVEL_NAMES = {
    1: "Ad-hoc",
    2: "Reactive",
    3: "Repeatable",
    4: "Proactive",
    5: "Optimised",
}

# Native ladders, lowest to highest maturity.
_LADDERS: dict[MaturityModel, tuple[str, ...]] = {
    MaturityModel.C2M2: (
        "Ad-hoc", "Initial", "Repeatable", "Defined", "Managed", "Optimised",
    ),
    MaturityModel.CMMC: (
        "Ad-hoc", "Reactive", "Defined", "Managed", "Optimised",
    ),
    MaturityModel.NIST_CSF: (
        "Partial", "Risk Informed", "Repeatable", "Adaptive", "Optimised",
    ),
    MaturityModel.CERT_RMM: (
        "Ad-hoc", "Initial", "Managed", "Defined", "Quantitatively Managed", "Optimised",
    ),
    MaturityModel.ISO_IEC_27035: (
        "Ad-hoc", "Initial", "Repeatable", "Managed", "Optimised",
    ),
    MaturityModel.ENISA_IM3: (
        "Ad-hoc", "Defined", "Managed", "Controlled", "Optimised",
    ),
}

# Canonical score per ladder ordinal. Six-level ladders collapse their top
# two rungs onto canonical 5; five-level ladders map ordinals straight
# through.
_SCORES_BY_ORDINAL: dict[MaturityModel, tuple[int, ...]] = {
    model: (1, 2, 3, 4, 5, 5) if len(ladder) == 6 else (1, 2, 3, 4, 5)
    for model, ladder in _LADDERS.items()
}

# Per-area effectiveness of each model, 1 (least) to 5 (most). Area order:
# risk mgmt, incident handling, training, staffing, governance,
# communication, culture.
_EFFECTIVENESS_ROWS: dict[MaturityModel, tuple[int, ...]] = {
    MaturityModel.CERT_RMM: (5, 5, 4, 4, 5, 4, 4),
    MaturityModel.ISO_IEC_27035: (4, 5, 3, 3, 4, 4, 3),
    MaturityModel.NIST_CSF: (4, 4, 3, 3, 5, 3, 4),
    MaturityModel.C2M2: (5, 4, 4, 4, 4, 3, 4),
    MaturityModel.CMMC: (4, 4, 4, 3, 5, 3, 4),
    MaturityModel.ENISA_IM3: (3, 4, 5, 4, 4, 5, 4),
}

EFFECTIVENESS_TABLE: dict[tuple[MaturityModel, CapabilityArea], int] = {
    (model, area): row[i]
    for model, row in _EFFECTIVENESS_ROWS.items()
    for i, area in enumerate(CapabilityArea)
}

_COMPLIANCE_REGIMES: dict[str, MaturityModel] = {
    "ISO/IEC 27001": MaturityModel.ISO_IEC_27035,
    "US DoD / CMMC": MaturityModel.CMMC,
}


def _normalize(name: str) -> str:
    """Case-insensitive, hyphen/space/underscore tolerant name key."""
    return " ".join(str(name).lower().replace("-", " ").replace("_", " ").split())


_MODEL_LOOKUP: dict[str, MaturityModel] = {}
for _m in MaturityModel:
    _MODEL_LOOKUP[_normalize(_m.name)] = _m
    _MODEL_LOOKUP[_normalize(_m.display_name)] = _m
    _MODEL_LOOKUP[_normalize(_m.display_name.replace("/", " "))] = _m

# Short forms seen in assessment write-ups ("InfoSec Governance", plain
# "Communication") resolve to the full area names.
_AREA_ALIASES: dict[CapabilityArea, tuple[str, ...]] = {
    CapabilityArea.RISK_MANAGEMENT: ("RiskManagement",),
    CapabilityArea.INCIDENT_HANDLING_BEST_PRACTICES: (
        "IncidentHandlingBestPractices", "Incident Handling",
    ),
    CapabilityArea.TRAINING_AND_AWARENESS: ("TrainingAndAwareness", "Training"),
    CapabilityArea.ADEQUATE_STAFFING: ("AdequateStaffing", "Staffing"),
    CapabilityArea.INFORMATION_SECURITY_GOVERNANCE: (
        "InformationSecurityGovernance", "InfoSec Governance", "Governance",
    ),
    CapabilityArea.INTERNAL_AND_EXTERNAL_COMMUNICATION: (
        "InternalAndExternalCommunication", "Communication",
    ),
    CapabilityArea.INFORMATION_SECURITY_CULTURE: (
        "InformationSecurityCulture", "InfoSec Culture", "Culture",
    ),
}

_AREA_LOOKUP: dict[str, CapabilityArea] = {}
for _a in CapabilityArea:
    _AREA_LOOKUP[_normalize(_a.name)] = _a
    _AREA_LOOKUP[_normalize(_a.display_name)] = _a
    for _alias in _AREA_ALIASES[_a]:
        _AREA_LOOKUP[_normalize(_alias)] = _a


def parse_model(name) -> MaturityModel:
    if isinstance(name, MaturityModel):
        return name
    key = _normalize(str(name).replace("/", " "))
    if key not in _MODEL_LOOKUP:
        valid = ", ".join(m.display_name for m in MaturityModel)
        raise UnknownModel(f"unknown maturity model {name!r}; expected one of: {valid}")
    return _MODEL_LOOKUP[key]


def parse_area(name) -> CapabilityArea:
    if isinstance(name, CapabilityArea):
        return name
    key = _normalize(name)
    if key not in _AREA_LOOKUP:
        valid = ", ".join(a.display_name for a in CapabilityArea)
        raise UnknownArea(f"unknown capability area {name!r}; expected one of: {valid}")
    return _AREA_LOOKUP[key]


def ladder(model: MaturityModel) -> tuple[NativeLevel, ...]:
    names = _LADDERS[model]
    return tuple(NativeLevel(model, name, i) for i, name in enumerate(names))


def list_models() -> list[ModelDescriptor]:
    """All six models in canonical order, with their native ladders."""
    return [
        ModelDescriptor(m, m.display_name, m.description, ladder(m))
        for m in MaturityModel
    ]


def canonical_score(model: MaturityModel, level_name: str) -> CanonicalScore:
    """Map a model's native level name onto the aligned 1-5 score."""
    model = parse_model(model)
    key = _normalize(level_name)
    for ordinal, name in enumerate(_LADDERS[model]):
        if _normalize(name) == key:
            score = _SCORES_BY_ORDINAL[model][ordinal]
            return CanonicalScore(score, CANONICAL_LEVEL_NAMES[score])
    valid = ", ".join(_LADDERS[model])
    raise UnknownLevel(
        f"{level_name!r} is not a {model.display_name} level; valid levels: {valid}"
    )


def canonical_level_name(score: int) -> str:
    """The canonical name (Ad-hoc .. Optimised) for a 1-5 score."""
    if score not in CANONICAL_LEVEL_NAMES:
        raise OutOfRange(f"canonical score must be in 1..5, got {score}")
    return CANONICAL_LEVEL_NAMES[score]


def canonical_score_for_name(name: str) -> Optional[CanonicalScore]:
    """Resolve a canonical level name to its score; None if not canonical."""
    key = _normalize(name)
    for score, level_name in CANONICAL_LEVEL_NAMES.items():
        if _normalize(level_name) == key:
            return CanonicalScore(score, level_name)
    return None


def effectiveness(model: MaturityModel, area: CapabilityArea) -> int:
    """Fixture effectiveness of ``model`` at assessing ``area`` (1-5)."""
    return EFFECTIVENESS_TABLE[(parse_model(model), parse_area(area))]


def select_best_combination(
    table: Optional[Mapping[tuple[MaturityModel, CapabilityArea], int]] = None,
) -> CmmSelection:
    """Pick, per area, a model attaining that area's maximum score.

    Among all per-area max assignments the set of distinct selected models
    is minimised; remaining ties break by canonical model order. Searches
    all 2^6 model subsets, which is trivially cheap.
    """
    if table is None:
        table = EFFECTIVENESS_TABLE
    models = list(MaturityModel)
    areas = list(CapabilityArea)
    best_per_area = {a: max(table[(m, a)] for m in models) for a in areas}

    for size in range(1, len(models) + 1):
        for subset in combinations(models, size):
            if all(
                any(table[(m, a)] == best_per_area[a] for m in subset)
                for a in areas
            ):
                assignments = {
                    a: next(m for m in subset if table[(m, a)] == best_per_area[a])
                    for a in areas
                }
                return CmmSelection(assignments, "best-combination")
    raise AssertionError("unreachable: the full model set always covers every area")


def select_for_compliance(regime: str) -> CmmSelection:
    """Assign one mandated model to every area for a compliance regime."""
    for key, model in _COMPLIANCE_REGIMES.items():
        if _normalize(key) == _normalize(regime):
            return CmmSelection({a: model for a in CapabilityArea}, key)
    supported = ", ".join(_COMPLIANCE_REGIMES)
    raise UnknownRegime(f"unknown regime {regime!r}; supported: {supported}")


def supported_regimes() -> list[str]:
    return list(_COMPLIANCE_REGIMES)


def registry_doc() -> dict:
    """Machine-readable dump of the whole registry (models endpoint)."""
    return {
        "areas": [a.display_name for a in CapabilityArea],
        "canonical_levels": [
            {"score": s, "name": n} for s, n in CANONICAL_LEVEL_NAMES.items()
        ],
        "models": [
            {
                "id": d.model.name,
                "display_name": d.display_name,
                "description": d.description,
                "levels": [
                    {
                        "name": lv.name,
                        "ordinal": lv.ordinal,
                        "canonical_score": canonical_score(d.model, lv.name).score,
                    }
                    for lv in d.levels
                ],
            }
            for d in list_models()
        ],
        "effectiveness": [
            {
                "model": m.name,
                "area": a.display_name,
                "score": EFFECTIVENESS_TABLE[(m, a)],
            }
            for m in MaturityModel
            for a in CapabilityArea
        ],
    }
