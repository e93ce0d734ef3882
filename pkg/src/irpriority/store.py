"""Append-only, file-backed document store.

Layout: <root>/<kind>/<id>.json plus <root>/index.json. Every save writes a
new document under a fresh id (write-temp-then-rename); nothing is ever
mutated or deleted, so earlier versions of a logical object stay readable.
A revised document records the id it supersedes via ``replaces``, and
writes can be made idempotent with a client-supplied request id.
"""

import json
import os
import tempfile
import uuid
from pathlib import Path
from typing import Optional

from . import rationals
from .errors import IoFailure, NotFound, ValidationFailure

KINDS = ("snapshot", "catalog", "matrix", "action_item")


class DocumentStore:
    def __init__(self, root):
        self.root = Path(root)
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            for kind in KINDS:
                (self.root / kind).mkdir(exist_ok=True)
        except OSError as exc:
            raise IoFailure(f"cannot initialise store at {self.root}: {exc}") from exc

    @property
    def _index_path(self) -> Path:
        return self.root / "index.json"

    def _read_index(self) -> dict:
        if not self._index_path.exists():
            return {"records": [], "request_ids": {}}
        try:
            return json.loads(self._index_path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise IoFailure(f"cannot read index: {exc}") from exc

    def _write_json(self, path: Path, doc: dict) -> None:
        # temp file in the same directory so os.replace stays atomic
        try:
            fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
            try:
                with os.fdopen(fd, "w") as handle:
                    json.dump(doc, handle, indent=2, sort_keys=True)
                os.replace(tmp, path)
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise
        except OSError as exc:
            raise IoFailure(f"cannot write {path}: {exc}") from exc

    def save(
        self,
        kind: str,
        doc: dict,
        *,
        request_id: Optional[str] = None,
        replaces: Optional[str] = None,
    ) -> str:
        """Persist a document; returns its id. Repeated saves with the same
        request id return the original id without writing again."""
        if kind not in KINDS:
            raise ValidationFailure(f"unknown record kind {kind!r}; expected one of {KINDS}")
        if not isinstance(doc, dict):
            raise ValidationFailure("record must be a JSON object")

        index = self._read_index()
        if request_id is not None:
            existing = index["request_ids"].get(f"{kind}:{request_id}")
            if existing is not None:
                return existing

        record_id = uuid.uuid4().hex[:12]
        stored = dict(doc)
        stored["id"] = record_id
        if replaces is not None:
            stored["replaces"] = replaces

        self._write_json(self.root / kind / f"{record_id}.json", stored)

        index["records"].append(
            {
                "kind": kind,
                "id": record_id,
                "org_unit": stored.get("org_unit"),
                "taken_at": stored.get("taken_at"),
                "replaces": replaces,
            }
        )
        if request_id is not None:
            index["request_ids"][f"{kind}:{request_id}"] = record_id
        self._write_json(self._index_path, index)
        return record_id

    def load(self, kind: str, record_id: str) -> dict:
        if kind not in KINDS:
            raise ValidationFailure(f"unknown record kind {kind!r}; expected one of {KINDS}")
        path = self.root / kind / f"{record_id}.json"
        if not path.exists():
            raise NotFound(f"no {kind} with id {record_id!r}")
        try:
            return json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise IoFailure(f"cannot read {path}: {exc}") from exc

    def latest(self, kind: str) -> Optional[dict]:
        """The most recently saved record of a kind, or None."""
        index = self._read_index()
        for record in reversed(index["records"]):
            if record["kind"] == kind:
                return self.load(kind, record["id"])
        return None

    def history(self, org_unit: str) -> list[dict]:
        """Snapshot summaries for one org unit, ascending by taken_at."""
        index = self._read_index()
        summaries = []
        for record in index["records"]:
            if record["kind"] != "snapshot" or record.get("org_unit") != org_unit:
                continue
            doc = self.load("snapshot", record["id"])
            summaries.append(
                {
                    "id": doc["id"],
                    "org_unit": doc["org_unit"],
                    "taken_at": doc["taken_at"],
                    "average": doc["average"],
                }
            )
        summaries.sort(key=lambda s: s["taken_at"])
        return summaries

    def list_ids(self, kind: str) -> list[str]:
        index = self._read_index()
        return [r["id"] for r in index["records"] if r["kind"] == kind]
