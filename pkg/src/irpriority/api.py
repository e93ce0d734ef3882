"""HTTP service exposing the registry, assessments, matrices, and what-if.

All computation lives in the library modules; handlers only parse JSON,
call the corresponding operation, and serialize the result. Numbers cross
the wire as exact {num, den} pairs plus ready-made display strings so
clients never re-round.
"""

import os
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import assessment, prioritization, rationals, registry
from .errors import IrPriorityError, ValidationFailure
from .store import DocumentStore

DEFAULT_STORE_ROOT = "./irpriority-store"


def _load_snapshot(store: DocumentStore, snapshot_id: str):
    return assessment.snapshot_from_doc(store.load("snapshot", snapshot_id))


def _resolve_catalog(store: DocumentStore, body: dict):
    """Catalog precedence: inline catalog, then catalog_id, then the most
    recently stored catalog, then the built-in default."""
    if body.get("catalog") is not None:
        return prioritization.catalog_from_doc(body["catalog"])
    if body.get("catalog_id") is not None:
        return prioritization.catalog_from_doc(store.load("catalog", body["catalog_id"]))
    stored = store.latest("catalog")
    if stored is not None:
        return prioritization.catalog_from_doc(stored)
    return prioritization.default_catalog()


def _resolve_incident(store: DocumentStore, body: dict):
    spec = body.get("incident")
    if spec is None:
        raise ValidationFailure("missing required field 'incident'")
    if isinstance(spec, dict):
        return prioritization.incident_from_doc(spec)
    return prioritization.find_incident(_resolve_catalog(store, body), spec)


def create_app(
    store_root: Optional[str] = None,
    cors_origins: Optional[list[str]] = None,
) -> FastAPI:
    root = store_root or os.environ.get("STORE_ROOT", DEFAULT_STORE_ROOT)
    store = DocumentStore(root)

    app = FastAPI(title="irpriority", version="0.1.0")
    app.state.store = store
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins
        or os.environ.get("CORS_ORIGINS", "*").split(","),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(IrPriorityError)
    async def domain_error_handler(_request: Request, exc: IrPriorityError):
        return JSONResponse(
            status_code=exc.status,
            content={"error": {"kind": exc.kind, "message": exc.message}},
        )

    def _selection_doc(selection: registry.CmmSelection) -> dict:
        return {
            "rationale": selection.rationale,
            "assignments": {
                area.display_name: model.name
                for area, model in selection.assignments.items()
            },
        }

    @app.get("/api/models")
    def get_models():
        return registry.registry_doc()

    @app.post("/api/selection/best")
    async def post_selection_best(request: Request):
        body = await _json_body(request, optional=True)
        table = None
        if body.get("table"):
            table = {
                (registry.parse_model(cell["model"]), registry.parse_area(cell["area"])): int(cell["score"])
                for cell in body["table"]
            }
            expected = {(m, a) for m in registry.MaturityModel for a in registry.CapabilityArea}
            if set(table) != expected:
                raise ValidationFailure("table must cover all 42 (model, area) cells")
        return _selection_doc(registry.select_best_combination(table))

    @app.post("/api/selection/compliance")
    async def post_selection_compliance(request: Request):
        body = await _json_body(request)
        if "regime" not in body:
            raise ValidationFailure("missing required field 'regime'")
        return _selection_doc(registry.select_for_compliance(body["regime"]))

    @app.post("/api/assessments", status_code=201)
    async def post_assessment(request: Request):
        body = await _json_body(request)
        for field in ("org_unit", "taken_at", "entries"):
            if field not in body:
                raise ValidationFailure(f"missing required field {field!r}")
        snapshot = assessment.record_assessment(
            body["org_unit"], body["taken_at"], body["entries"]
        )
        doc = assessment.snapshot_to_doc(snapshot)
        stored_id = store.save("snapshot", doc, request_id=body.get("request_id"))
        return store.load("snapshot", stored_id)

    @app.get("/api/assessments")
    def get_assessments(org_unit: str):
        return {"org_unit": org_unit, "snapshots": store.history(org_unit)}

    @app.get("/api/assessments/{snapshot_id}")
    def get_assessment(snapshot_id: str):
        return store.load("snapshot", snapshot_id)

    @app.post("/api/gap")
    async def post_gap(request: Request):
        body = await _json_body(request)
        if "snapshot_id" not in body:
            raise ValidationFailure("missing required field 'snapshot_id'")
        snapshot = _load_snapshot(store, body["snapshot_id"])
        report = assessment.gap_analysis(snapshot, body.get("targets"))
        return assessment.gap_report_to_doc(report)

    @app.post("/api/baseline")
    async def post_baseline(request: Request):
        body = await _json_body(request)
        for field in ("old_id", "new_id"):
            if field not in body:
                raise ValidationFailure(f"missing required field {field!r}")
        delta = assessment.compare_baseline(
            _load_snapshot(store, body["old_id"]),
            _load_snapshot(store, body["new_id"]),
        )
        return assessment.baseline_to_doc(delta)

    @app.get("/api/catalog")
    def get_catalog():
        stored = store.latest("catalog")
        if stored is not None:
            return stored
        return prioritization.catalog_to_doc(prioritization.default_catalog())

    @app.put("/api/catalog")
    async def put_catalog(request: Request):
        body = await _json_body(request)
        catalog = prioritization.catalog_from_doc(body)
        stored_id = store.save(
            "catalog",
            prioritization.catalog_to_doc(catalog),
            request_id=body.get("request_id") if isinstance(body, dict) else None,
        )
        return store.load("catalog", stored_id)

    @app.post("/api/matrix", status_code=201)
    async def post_matrix(request: Request):
        body = await _json_body(request)
        if "snapshot_id" not in body:
            raise ValidationFailure("missing required field 'snapshot_id'")
        snapshot = _load_snapshot(store, body["snapshot_id"])
        catalog = _resolve_catalog(store, body)
        matrix = prioritization.build_matrix(catalog, snapshot)
        doc = prioritization.matrix_to_doc(matrix)
        stored_id = store.save("matrix", doc, request_id=body.get("request_id"))
        return store.load("matrix", stored_id)

    @app.post("/api/matrix/branches")
    async def post_branch_matrix(request: Request):
        body = await _json_body(request)
        incident = _resolve_incident(store, body)
        if body.get("branches"):
            units = [
                (b["org_unit"], rationals.parse_decimal(str(b["capability"])))
                for b in body["branches"]
            ]
            matrix = prioritization.branch_matrix_from_capabilities(incident, units)
        elif body.get("snapshot_ids"):
            snapshots = [_load_snapshot(store, sid) for sid in body["snapshot_ids"]]
            units = [(s.org_unit, s.capability) for s in snapshots]
            matrix = prioritization.branch_matrix_from_capabilities(incident, units)
        else:
            raise ValidationFailure("provide either 'branches' or 'snapshot_ids'")
        return prioritization.branch_matrix_to_doc(matrix)

    @app.post("/api/matrix/{matrix_id}/review")
    async def post_matrix_review(matrix_id: str, request: Request):
        body = await _json_body(request, optional=True)
        matrix = prioritization.matrix_from_doc(store.load("matrix", matrix_id))
        advanced = matrix.advance_review()
        doc = prioritization.matrix_to_doc(advanced)
        doc.pop("id", None)
        stored_id = store.save(
            "matrix", doc, request_id=body.get("request_id"), replaces=matrix_id
        )
        return store.load("matrix", stored_id)

    @app.get("/api/matrix/{matrix_id}")
    def get_matrix(matrix_id: str):
        return store.load("matrix", matrix_id)

    @app.post("/api/whatif")
    async def post_whatif(request: Request):
        body = await _json_body(request)
        for field in ("snapshot_id", "overrides", "incident"):
            if field not in body:
                raise ValidationFailure(f"missing required field {field!r}")
        snapshot = _load_snapshot(store, body["snapshot_id"])
        incident = _resolve_incident(store, body)
        overrides = {
            registry.parse_area(area): score
            for area, score in dict(body["overrides"]).items()
        }
        old, new = prioritization.what_if(snapshot, overrides, incident)
        return {
            "old": prioritization.record_to_doc(old),
            "new": prioritization.record_to_doc(new),
        }

    return app


async def _json_body(request: Request, optional: bool = False) -> dict:
    raw = await request.body()
    if not raw:
        if optional:
            return {}
        raise ValidationFailure("request body must be a JSON object")
    try:
        body = await request.json()
    except Exception as exc:
        raise ValidationFailure(f"invalid JSON body: {exc}") from exc
    if not isinstance(body, dict):
        raise ValidationFailure("request body must be a JSON object")
    return body


def serve(
    host: str = "127.0.0.1",
    port: int = 8787,
    store_root: Optional[str] = None,
) -> None:
    import uvicorn

    app = create_app(store_root=store_root)
    uvicorn.run(app, host=host, port=port)
