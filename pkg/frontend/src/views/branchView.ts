/**
 * Per-incident branch comparison: one card per org unit with its
 * capability, score, and a band-colored level badge, riskiest first.
 */

import { ApiClient } from '../api';
import { levelBadge } from '../format';
import type { Store } from '../state';
import type { BranchMatrixDoc } from '../types';

export class BranchView {
  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private readonly store: Store,
  ) {}

  async compare(
    incident: string,
    branches: { org_unit: string; capability: string }[],
  ): Promise<void> {
    this.store.update({ pending: true, error: null });
    try {
      const matrix = await this.api.branchMatrix(incident, branches);
      this.store.update({ pending: false });
      this.render(matrix);
    } catch (err) {
      this.store.update({ pending: false, error: String(err) });
    }
  }

  render(matrix: BranchMatrixDoc): void {
    this.root.innerHTML = '';

    const title = document.createElement('h3');
    title.textContent = `${matrix.incident.name} (impact ${matrix.incident.impact}, severity ${matrix.incident.severity})`;
    this.root.appendChild(title);

    const list = document.createElement('div');
    list.id = 'branch-cards';
    for (const row of matrix.rows) {
      const card = document.createElement('div');
      card.className = 'branch-card';
      card.dataset.orgUnit = row.org_unit;

      const name = document.createElement('strong');
      name.textContent = row.org_unit;
      card.appendChild(name);

      const capability = document.createElement('span');
      capability.className = 'branch-capability';
      capability.textContent = `capability ${row.capability.display}`;
      card.appendChild(capability);

      const score = document.createElement('span');
      score.className = 'branch-score';
      score.textContent = row.display_score;
      card.appendChild(score);

      card.appendChild(levelBadge(row.level));
      list.appendChild(card);
    }
    this.root.appendChild(list);
  }
}
