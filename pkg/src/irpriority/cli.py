"""Operator command line covering the full assess-score-prioritise loop.

Exit codes: 0 success, 1 validation error, 2 I/O error.
"""

import json
import sys
from pathlib import Path

import click

from . import assessment, prioritization, rationals, registry
from .errors import IoFailure, IrPriorityError, NotFound
from .store import DocumentStore

EXIT_VALIDATION = 1
EXIT_IO = 2


def _fail(message: str, code: int):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _run(fn):
    try:
        fn()
    except (IoFailure, NotFound) as exc:
        _fail(exc.message, EXIT_IO)
    except IrPriorityError as exc:
        _fail(exc.message, EXIT_VALIDATION)
    except OSError as exc:
        _fail(str(exc), EXIT_IO)


def _read_json_file(path: str):
    p = Path(path)
    if not p.exists():
        raise IoFailure(f"file not found: {path}")
    try:
        return json.loads(p.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise IoFailure(f"cannot read {path}: {exc}") from exc


def _store(store_path: str) -> DocumentStore:
    return DocumentStore(store_path)


def _catalog_from(path):
    if path:
        return prioritization.catalog_from_doc(_read_json_file(path))
    return prioritization.default_catalog()


store_option = click.option(
    "--store",
    "store_path",
    envvar="STORE_ROOT",
    default="./irpriority-store",
    show_default=True,
    help="Store root directory (env: STORE_ROOT).",
)


@click.group()
def main():
    """Incident priority scoring from capability maturity assessments."""


@main.group()
def models():
    """Inspect the maturity model registry."""


@models.command("list")
def models_list():
    def go():
        for descriptor in registry.list_models():
            names = ", ".join(lv.name for lv in descriptor.levels)
            click.echo(f"{descriptor.model.name}: {descriptor.display_name} — {names}")
    _run(go)


@models.command("align")
@click.argument("model")
@click.argument("level", nargs=-1, required=True)
def models_align(model, level):
    def go():
        result = registry.canonical_score(registry.parse_model(model), " ".join(level))
        click.echo(f"{result.score} ({result.name})")
    _run(go)


@main.group()
def select():
    """Choose which maturity models to assess with."""


def _print_selection(selection):
    click.echo(f"rationale: {selection.rationale}")
    for area, model in selection.assignments.items():
        click.echo(f"{area.display_name}: {model.display_name}")


@select.command("best")
def select_best():
    _run(lambda: _print_selection(registry.select_best_combination()))


@select.command("compliance")
@click.argument("regime")
def select_compliance(regime):
    _run(lambda: _print_selection(registry.select_for_compliance(regime)))


@main.command()
@click.option("--file", "file_path", required=True, help="Assessment input JSON.")
@store_option
def assess(file_path, store_path):
    """Record an assessment snapshot; prints its id and average."""
    def go():
        doc = _read_json_file(file_path)
        snapshot = assessment.record_assessment(
            doc["org_unit"], doc["taken_at"], doc["entries"], store=_store(store_path)
        )
        click.echo(f"snapshot {snapshot.id} for {snapshot.org_unit}")
        click.echo(f"average capability: {snapshot.average_display}")
    _run(go)


@main.command()
@click.option("--snapshot", "snapshot_id", required=True)
@click.option("--targets", "targets_path", default=None, help="JSON map of area to target score.")
@store_option
def gap(snapshot_id, targets_path, store_path):
    """Gap analysis against target scores (default target: 4 everywhere)."""
    def go():
        store = _store(store_path)
        snapshot = assessment.snapshot_from_doc(store.load("snapshot", snapshot_id))
        targets = _read_json_file(targets_path) if targets_path else None
        report = assessment.gap_analysis(snapshot, targets)
        for entry in report.entries:
            flag = " (met)" if entry.met else ""
            click.echo(
                f"{entry.area.display_name}: current {entry.current}, "
                f"target {entry.target}, gap {entry.gap}{flag}"
            )
    _run(go)


@main.command()
@click.option("--old", "old_id", required=True)
@click.option("--new", "new_id", required=True)
@store_option
def baseline(old_id, new_id, store_path):
    """Compare a snapshot against an earlier baseline."""
    def go():
        store = _store(store_path)
        delta = assessment.compare_baseline(
            assessment.snapshot_from_doc(store.load("snapshot", old_id)),
            assessment.snapshot_from_doc(store.load("snapshot", new_id)),
        )
        if delta.org_unit_mismatch:
            click.echo("warning: snapshots are for different org units", err=True)
        for area, change in delta.deltas.items():
            click.echo(f"{area.display_name}: {change:+d}")
        click.echo(f"average delta: {rationals.display(delta.average_delta)}")
    _run(go)


def _print_matrix_table(matrix):
    header = f"{'Incident':<28} {'Impact':>6} {'Severity':>8} {'Capability':>10} {'Score':>6} Level"
    click.echo(header)
    for r in matrix.rows:
        click.echo(
            f"{r.incident.name:<28} {r.incident.impact.score:>6} "
            f"{r.incident.severity.score:>8} {rationals.display(r.capability):>10} "
            f"{r.display_score:>6} {r.level.value}"
        )


@main.command()
@click.option("--snapshot", "snapshot_id", required=True)
@click.option("--catalog", "catalog_path", default=None, help="Incident catalog JSON.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "table"]), default="table")
@store_option
def matrix(snapshot_id, catalog_path, fmt, store_path):
    """Build and persist a prioritisation matrix for a snapshot."""
    def go():
        store = _store(store_path)
        snapshot = assessment.snapshot_from_doc(store.load("snapshot", snapshot_id))
        built = prioritization.build_matrix(_catalog_from(catalog_path), snapshot)
        matrix_id = store.save("matrix", prioritization.matrix_to_doc(built))
        if fmt == "json":
            click.echo(json.dumps(store.load("matrix", matrix_id), indent=2))
        elif fmt == "csv":
            click.echo(prioritization.matrix_to_csv(built), nl=False)
        else:
            _print_matrix_table(built)
            click.echo(f"matrix id: {matrix_id}")
    _run(go)


@main.command()
@click.option("--incident", "incident_name", required=True)
@click.option("--snapshots", "snapshot_ids", default=None, help="Comma-separated snapshot ids.")
@click.option(
    "--capabilities",
    default=None,
    help="Direct capabilities, e.g. 'London=2.17,Paris=3.42'.",
)
@click.option("--catalog", "catalog_path", default=None)
@store_option
def branches(incident_name, snapshot_ids, capabilities, catalog_path, store_path):
    """Compare branches against one incident, riskiest first."""
    def go():
        incident = prioritization.find_incident(_catalog_from(catalog_path), incident_name)
        if capabilities:
            units = []
            for part in capabilities.split(","):
                unit, _, cap = part.partition("=")
                units.append((unit.strip(), rationals.parse_decimal(cap)))
            built = prioritization.branch_matrix_from_capabilities(incident, units)
        elif snapshot_ids:
            store = _store(store_path)
            snapshots = [
                assessment.snapshot_from_doc(store.load("snapshot", sid.strip()))
                for sid in snapshot_ids.split(",")
            ]
            built = prioritization.build_branch_matrix(incident, snapshots)
        else:
            _fail("provide --snapshots or --capabilities", EXIT_VALIDATION)
            return
        click.echo(f"{'Branch':<16} {'Capability':>10} {'Score':>6} Level")
        for r in built.rows:
            click.echo(
                f"{r.org_unit:<16} {rationals.display(r.capability):>10} "
                f"{r.display_score:>6} {r.level.value}"
            )
    _run(go)


@main.command()
@click.option("--snapshot", "snapshot_id", required=True)
@click.option(
    "--set",
    "overrides",
    multiple=True,
    required=True,
    help="Area override, e.g. --set 'Communication=4' (repeatable).",
)
@click.option("--incident", "incident_name", required=True)
@click.option("--catalog", "catalog_path", default=None)
@store_option
def whatif(snapshot_id, overrides, incident_name, catalog_path, store_path):
    """Preview how raising area scores would change an incident's priority."""
    def go():
        store = _store(store_path)
        snapshot = assessment.snapshot_from_doc(store.load("snapshot", snapshot_id))
        incident = prioritization.find_incident(_catalog_from(catalog_path), incident_name)
        parsed = {}
        for item in overrides:
            area, _, value = item.partition("=")
            try:
                parsed[registry.parse_area(area.strip())] = int(value)
            except ValueError:
                _fail(f"override {item!r} must look like Area=Score", EXIT_VALIDATION)
        old, new = prioritization.what_if(snapshot, parsed, incident)
        click.echo(
            f"{incident.name}: {old.display_score} {old.level.value}"
            f" -> {new.display_score} {new.level.value}"
            f" (capability {rationals.display(old.capability)}"
            f" -> {rationals.display(new.capability)})"
        )
    _run(go)


@main.command()
@click.option("--port", default=8787, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@store_option
def serve(port, host, store_path):
    """Run the HTTP API."""
    from .api import serve as run_server

    _run(lambda: run_server(host=host, port=port, store_root=store_path))


if __name__ == "__main__":
    main()
