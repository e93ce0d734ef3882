"""Assessment snapshots, average capability scores, gaps, and baselines.

A snapshot records one dated maturity assessment: for each of the seven
capability areas, which model was used, which level was observed, and the
resolved canonical 1-5 score. Averages are exact rationals; the 2-decimal
half-up rendering is what the priority formula consumes.
"""

import uuid
from dataclasses import dataclass, field, replace
from datetime import date, datetime, timezone
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from . import rationals
from .errors import (
    DuplicateArea,
    InvalidTimestamp,
    MissingArea,
    OutOfRange,
    UnknownLevel,
)
from .registry import (
    CapabilityArea,
    MaturityModel,
    canonical_score,
    canonical_score_for_name,
    parse_area,
    parse_model,
)

DEFAULT_GAP_TARGET = 4  # Proactive: the lowest band described as proactive


@dataclass(frozen=True)
class AreaAssessment:
    area: CapabilityArea
    model: MaturityModel
    level_name: str
    score: int
    notes: Optional[str] = None


@dataclass(frozen=True)
class AssessmentSnapshot:
    id: str
    org_unit: str
    taken_at: datetime
    entries: tuple[AreaAssessment, ...]

    @property
    def average(self) -> Fraction:
        return Fraction(sum(e.score for e in self.entries), len(self.entries))

    @property
    def average_display(self) -> str:
        return rationals.display(self.average)

    @property
    def capability(self) -> Fraction:
        """The 2-dp half-up rounded average fed into priority scoring."""
        return rationals.round_half_up(self.average)

    def score_of(self, area: CapabilityArea) -> int:
        return next(e.score for e in self.entries if e.area == area)


@dataclass(frozen=True)
class GapEntry:
    area: CapabilityArea
    current: int
    target: int

    @property
    def gap(self) -> int:
        return self.target - self.current

    @property
    def met(self) -> bool:
        return self.gap <= 0


@dataclass(frozen=True)
class GapReport:
    snapshot_id: str
    entries: tuple[GapEntry, ...]  # descending gap, ties in area order


@dataclass(frozen=True)
class BaselineDelta:
    old_id: str
    new_id: str
    deltas: Mapping[CapabilityArea, int]
    average_delta: Fraction
    org_unit_mismatch: bool = False


class ActionStatus(Enum):
    OPEN = "Open"
    IN_PROGRESS = "InProgress"
    DONE = "Done"


@dataclass(frozen=True)
class ActionItem:
    area: CapabilityArea
    description: str
    owner: str
    due: date
    status: ActionStatus = ActionStatus.OPEN


def resolve_level(model: MaturityModel, level_name: str):
    """Resolve a level name to its canonical score: native first, then canonical."""
    try:
        return canonical_score(model, level_name)
    except UnknownLevel:
        canonical = canonical_score_for_name(level_name)
        if canonical is not None:
            return canonical
        raise


def parse_timestamp(value) -> datetime:
    """Accept datetimes or ISO-8601 strings; naive values are taken as UTC."""
    if isinstance(value, datetime):
        ts = value
    else:
        try:
            ts = datetime.fromisoformat(str(value).replace("Z", "+00:00"))
        except ValueError as exc:
            raise InvalidTimestamp(f"cannot parse timestamp {value!r}: {exc}") from exc
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc)


def record_assessment(
    org_unit: str,
    taken_at,
    entries: Iterable,
    store=None,
) -> AssessmentSnapshot:
    """Build (and optionally persist) a snapshot from raw per-area entries.

    ``entries`` is an iterable of (area, model, level_name) or
    (area, model, level_name, notes) tuples, or mappings with those keys.
    All seven areas must appear exactly once.
    """
    ts = parse_timestamp(taken_at)
    resolved: dict[CapabilityArea, AreaAssessment] = {}
    for raw in entries:
        if isinstance(raw, Mapping):
            area, model = raw["area"], raw["model"]
            level_name = raw.get("level", raw.get("level_name"))
            notes = raw.get("notes")
        else:
            area, model, level_name = raw[0], raw[1], raw[2]
            notes = raw[3] if len(raw) > 3 else None
        area = parse_area(area)
        model = parse_model(model)
        if area in resolved:
            raise DuplicateArea(f"area {area.display_name!r} appears more than once")
        level = resolve_level(model, level_name)
        resolved[area] = AreaAssessment(area, model, str(level_name), level.score, notes)

    missing = [a for a in CapabilityArea if a not in resolved]
    if missing:
        names = ", ".join(a.display_name for a in missing)
        raise MissingArea(f"missing assessment for: {names}")

    snapshot = AssessmentSnapshot(
        id=uuid.uuid4().hex[:12],
        org_unit=str(org_unit),
        taken_at=ts,
        entries=tuple(resolved[a] for a in CapabilityArea),
    )
    if store is not None:
        stored_id = store.save("snapshot", snapshot_to_doc(snapshot))
        snapshot = replace(snapshot, id=stored_id)
    return snapshot


def average_capability(snapshot: AssessmentSnapshot) -> Fraction:
    """Exact unweighted mean of the seven canonical scores."""
    return snapshot.average


def gap_analysis(
    snapshot: AssessmentSnapshot,
    targets: Optional[Mapping] = None,
) -> GapReport:
    """Per-area target-minus-current gaps, largest shortfall first."""
    resolved_targets = {a: DEFAULT_GAP_TARGET for a in CapabilityArea}
    if targets:
        for area, target in targets.items():
            area = parse_area(area)
            if not isinstance(target, int) or not 1 <= target <= 5:
                raise OutOfRange(
                    f"target for {area.display_name} must be an integer in 1..5, got {target!r}"
                )
            resolved_targets[area] = target

    entries = [
        GapEntry(a, snapshot.score_of(a), resolved_targets[a]) for a in CapabilityArea
    ]
    entries.sort(key=lambda e: (-e.gap, e.area.order))
    return GapReport(snapshot.id, tuple(entries))


def compare_baseline(
    old: AssessmentSnapshot, new: AssessmentSnapshot
) -> BaselineDelta:
    """Per-area and average score deltas (new minus old), exact."""
    deltas = {a: new.score_of(a) - old.score_of(a) for a in CapabilityArea}
    return BaselineDelta(
        old_id=old.id,
        new_id=new.id,
        deltas=deltas,
        average_delta=new.average - old.average,
        org_unit_mismatch=old.org_unit != new.org_unit,
    )


# --- serialization -----------------------------------------------------------

def snapshot_to_doc(snapshot: AssessmentSnapshot) -> dict:
    return {
        "id": snapshot.id,
        "org_unit": snapshot.org_unit,
        "taken_at": snapshot.taken_at.isoformat(),
        "entries": [
            {
                "area": e.area.display_name,
                "model": e.model.name,
                "level": e.level_name,
                "score": e.score,
                "notes": e.notes,
            }
            for e in snapshot.entries
        ],
        "average": rationals.to_doc(snapshot.average),
    }


def snapshot_from_doc(doc: dict) -> AssessmentSnapshot:
    entries = tuple(
        AreaAssessment(
            area=parse_area(e["area"]),
            model=parse_model(e["model"]),
            level_name=e["level"],
            score=int(e["score"]),
            notes=e.get("notes"),
        )
        for e in doc["entries"]
    )
    return AssessmentSnapshot(
        id=doc["id"],
        org_unit=doc["org_unit"],
        taken_at=parse_timestamp(doc["taken_at"]),
        entries=entries,
    )


def gap_report_to_doc(report: GapReport) -> dict:
    return {
        "snapshot_id": report.snapshot_id,
        "entries": [
            {
                "area": e.area.display_name,
                "current": e.current,
                "target": e.target,
                "gap": e.gap,
                "met": e.met,
            }
            for e in report.entries
        ],
    }


def baseline_to_doc(delta: BaselineDelta) -> dict:
    return {
        "old_id": delta.old_id,
        "new_id": delta.new_id,
        "deltas": {a.display_name: d for a, d in delta.deltas.items()},
        "average_delta": rationals.to_doc(delta.average_delta),
        "org_unit_mismatch": delta.org_unit_mismatch,
    }


def action_item_to_doc(item: ActionItem) -> dict:
    return {
        "area": item.area.display_name,
        "description": item.description,
        "owner": item.owner,
        "due": item.due.isoformat(),
        "status": item.status.value,
    }


def action_item_from_doc(doc: dict) -> ActionItem:
    return ActionItem(
        area=parse_area(doc["area"]),
        description=doc["description"],
        owner=doc["owner"],
        due=date.fromisoformat(doc["due"]),
        status=ActionStatus(doc["status"]),
    )
