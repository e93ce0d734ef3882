"""Impact/severity rubrics, the priority-score formula, and matrices.

Priority score = (impact + severity) / capability, where capability is the
organisation's average capability score rounded half-up to 2 decimals. The
score lives in [0.4, 7.0] and bands into Low / Medium / High / Critical on
the unrounded quotient.
"""

import csv
import io
import json
import uuid
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from . import rationals
from .assessment import AssessmentSnapshot
from .errors import (
    CapabilityOutOfRange,
    DuplicateOrgUnit,
    EmptyCatalog,
    InvalidReviewTransition,
    OutOfRange,
    ScoreOutOfRange,
    UnknownIncident,
    ValidationFailure,
)
from .registry import CapabilityArea, parse_area


class ImpactLevel(Enum):
    LOW = (1, "Minimal disruption, negligible financial impact, and involves non-sensitive data.")
    MEDIUM = (2, "Partial disruption, moderate financial impact, and involves sensitive data.")
    HIGH = (3, "Significant disruption, substantial financial loss, and involves highly sensitive data.")

    @property
    def score(self) -> int:
        return self.value[0]

    @property
    def criteria(self) -> str:
        return self.value[1]

    @property
    def label(self) -> str:
        return self.name.capitalize()


class SeverityLevel(Enum):
    LOW = (1, "Affects a small number of systems/users and is easily containable.")
    MODERATE = (2, "Affects multiple systems/departments and is manageable with existing resources.")
    HIGH = (3, "Affects significant portions of infrastructure and requires significant resources.")
    CRITICAL = (4, "Affects the entire organisation and is highly challenging to contain and recover.")

    @property
    def score(self) -> int:
        return self.value[0]

    @property
    def criteria(self) -> str:
        return self.value[1]

    @property
    def label(self) -> str:
        return self.name.capitalize()


class PriorityLevel(Enum):
    LOW = "Low"
    MEDIUM = "Medium"
    HIGH = "High"
    CRITICAL = "Critical"

    @property
    def order(self) -> int:
        return list(PriorityLevel).index(self)


class ReviewStatus(Enum):
    DRAFT = "Draft"
    PEER_REVIEWED = "PeerReviewed"
    MANAGEMENT_APPROVED = "ManagementApproved"

    @property
    def order(self) -> int:
        return list(ReviewStatus).index(self)


SCORE_MIN = Fraction(2, 5)
SCORE_MAX = Fraction(7)

# Band upper bounds (inclusive). Contiguous half-open bands resolve the
# printed threshold gaps and reproduce every worked label.
_BANDS = (
    (Fraction(2), PriorityLevel.LOW),
    (Fraction(7, 2), PriorityLevel.MEDIUM),
    (Fraction(5), PriorityLevel.HIGH),
    (Fraction(7), PriorityLevel.CRITICAL),
)


@dataclass(frozen=True)
class IncidentProfile:
    name: str
    impact: ImpactLevel
    severity: SeverityLevel

    def __post_init__(self):
        if not self.name or not str(self.name).strip():
            raise ValidationFailure("incident name must be non-empty")


@dataclass(frozen=True)
class PriorityRecord:
    incident: IncidentProfile
    capability: Fraction  # the 2-dp rounded average actually used
    score: Fraction

    @property
    def display_score(self) -> str:
        return rationals.display(self.score)

    @property
    def level(self) -> PriorityLevel:
        return priority_level(self.score)


@dataclass(frozen=True)
class PrioritizationMatrix:
    id: str
    snapshot_id: str
    rows: tuple[PriorityRecord, ...]
    review_status: ReviewStatus = ReviewStatus.DRAFT
    created_at: Optional[datetime] = None

    def advance_review(self) -> "PrioritizationMatrix":
        """Move the review status one step forward (Draft -> ... -> Approved)."""
        order = list(ReviewStatus)
        idx = order.index(self.review_status)
        if idx + 1 >= len(order):
            raise InvalidReviewTransition(
                f"matrix is already {self.review_status.value}"
            )
        return replace(self, review_status=order[idx + 1])


@dataclass(frozen=True)
class BranchRow:
    org_unit: str
    capability: Fraction
    score: Fraction

    @property
    def display_score(self) -> str:
        return rationals.display(self.score)

    @property
    def level(self) -> PriorityLevel:
        return priority_level(self.score)


@dataclass(frozen=True)
class BranchMatrix:
    incident: IncidentProfile
    rows: tuple[BranchRow, ...]  # descending score: highest-risk branch first


def default_catalog() -> list[IncidentProfile]:
    """The worked eight-incident catalog; a starting point, not a constant."""
    return [
        IncidentProfile("Phishing Attacks", ImpactLevel.MEDIUM, SeverityLevel.HIGH),
        IncidentProfile("Zero-Day Exploits", ImpactLevel.HIGH, SeverityLevel.CRITICAL),
        IncidentProfile("Data Corruption", ImpactLevel.HIGH, SeverityLevel.MODERATE),
        IncidentProfile("DDoS Attacks", ImpactLevel.LOW, SeverityLevel.MODERATE),
        IncidentProfile("Insider Threats", ImpactLevel.MEDIUM, SeverityLevel.HIGH),
        IncidentProfile("Malware/Ransomware", ImpactLevel.HIGH, SeverityLevel.CRITICAL),
        IncidentProfile("Unauthorised Access", ImpactLevel.HIGH, SeverityLevel.HIGH),
        IncidentProfile("System Misconfigurations", ImpactLevel.MEDIUM, SeverityLevel.LOW),
    ]


def parse_impact(value) -> ImpactLevel:
    if isinstance(value, ImpactLevel):
        return value
    if isinstance(value, int):
        for level in ImpactLevel:
            if level.score == value:
                return level
        raise OutOfRange(f"impact score must be 1..3, got {value}")
    key = str(value).strip().lower()
    for level in ImpactLevel:
        if level.name.lower() == key:
            return level
    raise OutOfRange(f"unknown impact level {value!r}; expected Low, Medium, or High")


def parse_severity(value) -> SeverityLevel:
    if isinstance(value, SeverityLevel):
        return value
    if isinstance(value, int):
        for level in SeverityLevel:
            if level.score == value:
                return level
        raise OutOfRange(f"severity score must be 1..4, got {value}")
    key = str(value).strip().lower()
    for level in SeverityLevel:
        if level.name.lower() == key:
            return level
    raise OutOfRange(
        f"unknown severity level {value!r}; expected Low, Moderate, High, or Critical"
    )


def _check_capability(capability) -> Fraction:
    cap = Fraction(capability) if not isinstance(capability, Fraction) else capability
    if not Fraction(1) <= cap <= Fraction(5):
        raise CapabilityOutOfRange(
            f"average capability must be in [1, 5], got {rationals.display(cap)}"
        )
    return cap


def priority_score(
    impact: ImpactLevel, severity: SeverityLevel, capability
) -> Fraction:
    """(impact + severity) / capability, as an exact rational."""
    cap = _check_capability(capability)
    return Fraction(impact.score + severity.score) / cap


def priority_level(score) -> PriorityLevel:
    """Band a priority score: Low <=2.0 < Medium <=3.5 < High <=5.0 < Critical."""
    value = Fraction(score) if not isinstance(score, Fraction) else score
    if not SCORE_MIN <= value <= SCORE_MAX:
        raise ScoreOutOfRange(
            f"priority score must be in [0.4, 7.0], got {rationals.display(value)}"
        )
    for upper, level in _BANDS:
        if value <= upper:
            return level
    raise AssertionError("unreachable: bands cover [0.4, 7.0]")


def score_bounds() -> tuple[Fraction, Fraction]:
    return (SCORE_MIN, SCORE_MAX)


def build_matrix(
    catalog: Sequence[IncidentProfile],
    snapshot: AssessmentSnapshot,
    created_at: Optional[datetime] = None,
) -> PrioritizationMatrix:
    """One priority record per incident against the snapshot's capability."""
    catalog = list(catalog)
    if not catalog:
        raise EmptyCatalog("incident catalog is empty")
    names = [p.name for p in catalog]
    if len(set(names)) != len(names):
        raise ValidationFailure("incident names must be unique within a catalog")
    cap = snapshot.capability
    rows = [
        PriorityRecord(p, cap, priority_score(p.impact, p.severity, cap))
        for p in catalog
    ]
    rows.sort(key=lambda r: (-r.score, r.incident.name))
    return PrioritizationMatrix(
        id=uuid.uuid4().hex[:12],
        snapshot_id=snapshot.id,
        rows=tuple(rows),
        created_at=created_at or datetime.now(timezone.utc),
    )


def build_branch_matrix(
    incident: IncidentProfile,
    snapshots: Sequence[AssessmentSnapshot],
) -> BranchMatrix:
    """Compare branches' exposure to one incident, riskiest branch first."""
    units = [(s.org_unit, s.capability) for s in snapshots]
    return branch_matrix_from_capabilities(incident, units)


def branch_matrix_from_capabilities(
    incident: IncidentProfile,
    units: Sequence[tuple[str, object]],
) -> BranchMatrix:
    """Branch matrix from (org_unit, capability) pairs supplied directly."""
    if not units:
        raise ValidationFailure("at least one branch is required")
    seen = set()
    rows = []
    for org_unit, capability in units:
        if org_unit in seen:
            raise DuplicateOrgUnit(f"duplicate org unit {org_unit!r}")
        seen.add(org_unit)
        cap = _check_capability(
            rationals.parse_decimal(capability)
            if isinstance(capability, str)
            else capability
        )
        rows.append(BranchRow(org_unit, cap, priority_score(incident.impact, incident.severity, cap)))
    rows.sort(key=lambda r: (-r.score, r.org_unit))
    return BranchMatrix(incident, tuple(rows))


def what_if(
    snapshot: AssessmentSnapshot,
    overrides: Mapping,
    incident: IncidentProfile,
) -> tuple[PriorityRecord, PriorityRecord]:
    """Before/after priority for one incident under hypothetical area scores.

    Nothing is persisted; the snapshot itself is untouched.
    """
    if not overrides:
        raise OutOfRange("at least one area override is required")
    scores = {e.area: e.score for e in snapshot.entries}
    for area, score in overrides.items():
        area = parse_area(area)
        if not isinstance(score, int) or not 1 <= score <= 5:
            raise OutOfRange(
                f"override for {area.display_name} must be an integer in 1..5, got {score!r}"
            )
        scores[area] = score

    old_cap = snapshot.capability
    new_avg = Fraction(sum(scores.values()), len(scores))
    new_cap = rationals.round_half_up(new_avg)
    old = PriorityRecord(incident, old_cap, priority_score(incident.impact, incident.severity, old_cap))
    new = PriorityRecord(incident, new_cap, priority_score(incident.impact, incident.severity, new_cap))
    return old, new


def find_incident(catalog: Sequence[IncidentProfile], name: str) -> IncidentProfile:
    key = str(name).strip().lower()
    for profile in catalog:
        if profile.name.lower() == key:
            return profile
    known = ", ".join(p.name for p in catalog)
    raise UnknownIncident(f"unknown incident {name!r}; catalog has: {known}")


# --- serialization -----------------------------------------------------------

def incident_to_doc(profile: IncidentProfile) -> dict:
    return {
        "name": profile.name,
        "impact": profile.impact.label,
        "severity": profile.severity.label,
    }


def incident_from_doc(doc: Mapping) -> IncidentProfile:
    return IncidentProfile(
        name=doc["name"],
        impact=parse_impact(doc["impact"]),
        severity=parse_severity(doc["severity"]),
    )


def catalog_to_doc(catalog: Sequence[IncidentProfile]) -> dict:
    return {"incidents": [incident_to_doc(p) for p in catalog]}


def catalog_from_doc(doc) -> list[IncidentProfile]:
    items = doc["incidents"] if isinstance(doc, Mapping) else doc
    catalog = [incident_from_doc(item) for item in items]
    names = [p.name for p in catalog]
    if len(set(names)) != len(names):
        raise ValidationFailure("incident names must be unique within a catalog")
    return catalog


def record_to_doc(record: PriorityRecord) -> dict:
    return {
        "incident": incident_to_doc(record.incident),
        "impact_score": record.incident.impact.score,
        "severity_score": record.incident.severity.score,
        "capability": rationals.to_doc(record.capability),
        "score": rationals.to_doc(record.score),
        "display_score": record.display_score,
        "level": record.level.value,
    }


def matrix_to_doc(matrix: PrioritizationMatrix) -> dict:
    return {
        "id": matrix.id,
        "snapshot_id": matrix.snapshot_id,
        "review_status": matrix.review_status.value,
        "created_at": matrix.created_at.isoformat() if matrix.created_at else None,
        "rows": [record_to_doc(r) for r in matrix.rows],
    }


def matrix_from_doc(doc: Mapping) -> PrioritizationMatrix:
    rows = tuple(
        PriorityRecord(
            incident=incident_from_doc(r["incident"]),
            capability=rationals.from_doc(r["capability"]),
            score=rationals.from_doc(r["score"]),
        )
        for r in doc["rows"]
    )
    created = doc.get("created_at")
    return PrioritizationMatrix(
        id=doc["id"],
        snapshot_id=doc["snapshot_id"],
        rows=rows,
        review_status=ReviewStatus(doc["review_status"]),
        created_at=datetime.fromisoformat(created) if created else None,
    )


def branch_matrix_to_doc(matrix: BranchMatrix) -> dict:
    return {
        "incident": incident_to_doc(matrix.incident),
        "rows": [
            {
                "org_unit": r.org_unit,
                "capability": rationals.to_doc(r.capability),
                "score": rationals.to_doc(r.score),
                "display_score": r.display_score,
                "level": r.level.value,
            }
            for r in matrix.rows
        ],
    }


def matrix_to_csv(matrix: PrioritizationMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["incident", "impact", "severity", "capability", "score", "level"])
    for r in matrix.rows:
        writer.writerow([
            r.incident.name,
            r.incident.impact.score,
            r.incident.severity.score,
            rationals.display(r.capability),
            r.display_score,
            r.level.value,
        ])
    return buf.getvalue()
