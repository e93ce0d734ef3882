/**
 * Assessment entry form: pick a model per area (optionally pre-filled from
 * a selection), choose a native level from that model's ladder, submit.
 * Shows the returned average gauge, gap bars, and the history trend.
 */

import { ApiClient } from '../api';
import type { Store } from '../state';
import type { GapReportDoc, RegistryDoc, SelectionDoc, SnapshotDoc } from '../types';

export class AssessmentForm {
  private modelByArea: Record<string, string> = {};
  private levelByArea: Record<string, string> = {};

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private readonly store: Store,
  ) {}

  async init(): Promise<void> {
    const registry = this.store.get().registry ?? (await this.api.getModels());
    this.store.update({ registry });
    for (const area of registry.areas) {
      this.modelByArea[area] = registry.models[0].id;
    }
    this.render(registry);
  }

  async prefillFromSelection(selection: SelectionDoc): Promise<void> {
    const registry = this.store.get().registry;
    if (!registry) return;
    for (const [area, model] of Object.entries(selection.assignments)) {
      this.modelByArea[area] = model;
      delete this.levelByArea[area];
    }
    this.render(registry);
  }

  private ladderOf(registry: RegistryDoc, modelId: string): string[] {
    const model = registry.models.find((m) => m.id === modelId);
    return model ? model.levels.map((lv) => lv.name) : [];
  }

  private missingAreas(registry: RegistryDoc): string[] {
    return registry.areas.filter((area) => !this.levelByArea[area]);
  }

  private render(registry: RegistryDoc): void {
    this.root.innerHTML = '';

    const orgRow = document.createElement('div');
    orgRow.className = 'form-row';
    const orgLabel = document.createElement('label');
    orgLabel.textContent = 'Organisation / branch';
    const orgInput = document.createElement('input');
    orgInput.id = 'org-unit';
    orgInput.value = 'HQ';
    orgLabel.appendChild(orgInput);
    orgRow.appendChild(orgLabel);
    this.root.appendChild(orgRow);

    for (const area of registry.areas) {
      const row = document.createElement('div');
      row.className = 'form-row area-row';
      row.dataset.area = area;

      const name = document.createElement('span');
      name.className = 'area-name';
      name.textContent = area;
      row.appendChild(name);

      const modelSelect = document.createElement('select');
      modelSelect.className = 'model-select';
      for (const model of registry.models) {
        const option = document.createElement('option');
        option.value = model.id;
        option.textContent = model.display_name;
        option.selected = model.id === this.modelByArea[area];
        modelSelect.appendChild(option);
      }
      modelSelect.addEventListener('change', () => {
        this.modelByArea[area] = modelSelect.value;
        delete this.levelByArea[area];
        this.render(registry);
      });
      row.appendChild(modelSelect);

      const levelSelect = document.createElement('select');
      levelSelect.className = 'level-select';
      const placeholder = document.createElement('option');
      placeholder.value = '';
      placeholder.textContent = 'choose level…';
      levelSelect.appendChild(placeholder);
      for (const level of this.ladderOf(registry, this.modelByArea[area])) {
        const option = document.createElement('option');
        option.value = level;
        option.textContent = level;
        option.selected = level === this.levelByArea[area];
        levelSelect.appendChild(option);
      }
      levelSelect.addEventListener('change', () => {
        if (levelSelect.value) this.levelByArea[area] = levelSelect.value;
        else delete this.levelByArea[area];
        this.refreshSubmit(registry);
      });
      row.appendChild(levelSelect);

      this.root.appendChild(row);
    }

    const submitRow = document.createElement('div');
    submitRow.className = 'form-row';
    const submit = document.createElement('button');
    submit.id = 'assessment-submit';
    submit.textContent = 'Record assessment';
    submit.addEventListener('click', () => void this.submit(registry, orgInput.value));
    submitRow.appendChild(submit);
    const hint = document.createElement('span');
    hint.id = 'missing-hint';
    hint.className = 'hint';
    submitRow.appendChild(hint);
    this.root.appendChild(submitRow);

    const results = document.createElement('div');
    results.id = 'assessment-results';
    this.root.appendChild(results);

    this.refreshSubmit(registry);
  }

  private refreshSubmit(registry: RegistryDoc): void {
    const submit = this.root.querySelector<HTMLButtonElement>('#assessment-submit');
    const hint = this.root.querySelector<HTMLElement>('#missing-hint');
    if (!submit || !hint) return;
    const missing = this.missingAreas(registry);
    submit.disabled = missing.length > 0;
    hint.textContent = missing.length > 0 ? `missing: ${missing.join(', ')}` : '';
  }

  private async submit(registry: RegistryDoc, orgUnit: string): Promise<void> {
    this.store.update({ pending: true, error: null });
    try {
      const entries = registry.areas.map((area) => ({
        area,
        model: this.modelByArea[area],
        level: this.levelByArea[area],
      }));
      const snapshot = await this.api.recordAssessment(
        orgUnit,
        new Date().toISOString(),
        entries,
      );
      const [gap, history] = await Promise.all([
        this.api.gap(snapshot.id),
        this.api.history(orgUnit),
      ]);
      this.store.update({ snapshot, history: history.snapshots, pending: false });
      this.renderResults(snapshot, gap);
    } catch (err) {
      this.store.update({ pending: false, error: String(err) });
    }
  }

  private renderResults(snapshot: SnapshotDoc, gap: GapReportDoc): void {
    const results = this.root.querySelector<HTMLElement>('#assessment-results');
    if (!results) return;
    results.innerHTML = '';

    const gauge = document.createElement('div');
    gauge.id = 'average-gauge';
    gauge.className = 'gauge';
    gauge.textContent = snapshot.average.display;
    gauge.dataset.display = snapshot.average.display;
    results.appendChild(gauge);

    const bars = document.createElement('div');
    bars.id = 'gap-bars';
    for (const entry of gap.entries) {
      const bar = document.createElement('div');
      bar.className = 'gap-bar';
      bar.dataset.area = entry.area;
      bar.dataset.gap = String(entry.gap);
      const fill = document.createElement('div');
      fill.className = entry.met ? 'gap-fill met' : 'gap-fill';
      fill.style.width = `${Math.max(entry.gap, 0) * 25}%`;
      const label = document.createElement('span');
      label.textContent = `${entry.area}: gap ${entry.gap}${entry.met ? ' (met)' : ''}`;
      bar.appendChild(label);
      bar.appendChild(fill);
      bars.appendChild(bar);
    }
    results.appendChild(bars);

    const history = document.createElement('ol');
    history.id = 'history-points';
    for (const point of this.store.get().history) {
      const item = document.createElement('li');
      item.textContent = `${point.taken_at}: ${point.average.display}`;
      history.appendChild(item);
    }
    results.appendChild(history);
  }
}
