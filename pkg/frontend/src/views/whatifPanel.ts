/**
 * What-if explorer: one slider per capability area, initialized to the
 * current snapshot's scores. Moving a slider calls the what-if endpoint
 * for every catalog incident and shows old -> new score and band moves.
 * All numbers shown are API payload values.
 */

import { ApiClient } from '../api';
import { levelBadge } from '../format';
import { currentScores, type Store } from '../state';
import type { SnapshotDoc, WhatIfDoc } from '../types';

export class WhatIfPanel {
  private overrides: Record<string, number> = {};
  private requestSeq = 0; // last-write-wins: stale responses are dropped

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private readonly store: Store,
  ) {}

  async init(): Promise<void> {
    const snapshot = this.store.get().snapshot;
    if (!snapshot) {
      this.root.textContent = 'Record an assessment first.';
      return;
    }
    const catalog = this.store.get().catalog ?? (await this.api.getCatalog());
    this.store.update({ catalog });
    this.overrides = {};
    this.renderSliders(snapshot);
  }

  private renderSliders(snapshot: SnapshotDoc): void {
    this.root.innerHTML = '';
    const baseline = currentScores(snapshot);

    for (const [area, score] of Object.entries(baseline)) {
      const row = document.createElement('div');
      row.className = 'slider-row';
      row.dataset.area = area;

      const label = document.createElement('label');
      label.textContent = `${area} (${score})`;

      const slider = document.createElement('input');
      slider.type = 'range';
      slider.min = '1';
      slider.max = '5';
      slider.step = '1';
      slider.value = String(score);
      slider.dataset.area = area;
      slider.addEventListener('input', () => {
        this.setOverride(area, Number(slider.value), baseline);
      });

      const value = document.createElement('span');
      value.className = 'slider-value';
      value.textContent = String(score);

      row.appendChild(label);
      row.appendChild(slider);
      row.appendChild(value);
      this.root.appendChild(row);
    }

    const results = document.createElement('div');
    results.id = 'whatif-results';
    this.root.appendChild(results);
  }

  setOverride(area: string, value: number, baseline: Record<string, number>): void {
    if (value === baseline[area]) delete this.overrides[area];
    else this.overrides[area] = value;

    const row = this.root.querySelector<HTMLElement>(`.slider-row[data-area="${area}"]`);
    row?.querySelector('.slider-value')?.replaceChildren(String(value));

    void this.refresh();
  }

  async refresh(): Promise<void> {
    const results = this.root.querySelector<HTMLElement>('#whatif-results');
    const snapshot = this.store.get().snapshot;
    const catalog = this.store.get().catalog;
    if (!results || !snapshot || !catalog) return;

    if (Object.keys(this.overrides).length === 0) {
      results.innerHTML = '';
      return;
    }

    const seq = ++this.requestSeq;
    this.store.update({ pending: true, error: null });
    try {
      const deltas = await Promise.all(
        catalog.incidents.map(async (incident) => ({
          incident: incident.name,
          result: await this.api.whatIf(snapshot.id, this.overrides, incident.name),
        })),
      );
      if (seq !== this.requestSeq) return;
      this.store.update({ pending: false });
      this.renderDeltas(results, deltas);
    } catch (err) {
      if (seq !== this.requestSeq) return;
      this.store.update({ pending: false, error: String(err) });
    }
  }

  private renderDeltas(
    results: HTMLElement,
    deltas: { incident: string; result: WhatIfDoc }[],
  ): void {
    results.innerHTML = '';
    for (const { incident, result } of deltas) {
      const row = document.createElement('div');
      row.className = 'whatif-row';
      row.dataset.incident = incident;
      row.dataset.oldScore = result.old.display_score;
      row.dataset.newScore = result.new.display_score;

      const name = document.createElement('span');
      name.textContent = incident;
      row.appendChild(name);

      const change = document.createElement('span');
      change.className = 'whatif-change';
      change.textContent = `${result.old.display_score} → ${result.new.display_score}`;
      row.appendChild(change);

      row.appendChild(levelBadge(result.old.level));
      const arrow = document.createElement('span');
      arrow.textContent = '→';
      row.appendChild(arrow);
      row.appendChild(levelBadge(result.new.level));

      if (result.old.level !== result.new.level) row.classList.add('band-change');
      results.appendChild(row);
    }
  }
}
