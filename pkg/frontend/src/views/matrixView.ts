/**
 * Prioritisation matrix table: band-colored level badges, sortable columns
 * (descending score by default), and review-status advance buttons that
 * disappear once the matrix is management-approved.
 */

import { ApiClient } from '../api';
import { levelBadge } from '../format';
import type { Store } from '../state';
import type { MatrixDoc, PriorityRowDoc } from '../types';

type SortKey = 'score' | 'name';

const NEXT_REVIEW_LABEL: Record<string, string | null> = {
  Draft: 'Mark peer-reviewed',
  PeerReviewed: 'Mark management-approved',
  ManagementApproved: null,
};

export class MatrixView {
  private sortKey: SortKey = 'score';

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private readonly store: Store,
  ) {}

  async buildForCurrentSnapshot(): Promise<void> {
    const snapshot = this.store.get().snapshot;
    if (!snapshot) return;
    this.store.update({ pending: true, error: null });
    try {
      const matrix = await this.api.buildMatrix(snapshot.id);
      this.store.update({ matrix, pending: false });
      this.render(matrix);
    } catch (err) {
      this.store.update({ pending: false, error: String(err) });
    }
  }

  private sortedRows(matrix: MatrixDoc): PriorityRowDoc[] {
    const rows = [...matrix.rows];
    if (this.sortKey === 'name') {
      rows.sort((a, b) => a.incident.name.localeCompare(b.incident.name));
    }
    // 'score': keep API order, already descending score
    return rows;
  }

  render(matrix: MatrixDoc): void {
    this.root.innerHTML = '';

    const status = document.createElement('div');
    status.id = 'review-status';
    status.textContent = `Review status: ${matrix.review_status}`;
    this.root.appendChild(status);

    const nextLabel = NEXT_REVIEW_LABEL[matrix.review_status];
    if (nextLabel) {
      const advance = document.createElement('button');
      advance.id = 'review-advance';
      advance.textContent = nextLabel;
      advance.addEventListener('click', () => void this.advance(matrix.id));
      this.root.appendChild(advance);
    }

    const table = document.createElement('table');
    table.id = 'matrix-table';
    const head = document.createElement('tr');
    for (const [label, key] of [
      ['Incident', 'name'],
      ['Impact', null],
      ['Severity', null],
      ['Capability', null],
      ['Score', 'score'],
      ['Level', null],
    ] as [string, SortKey | null][]) {
      const th = document.createElement('th');
      th.textContent = label;
      if (key) {
        th.classList.add('sortable');
        th.addEventListener('click', () => {
          this.sortKey = key;
          this.render(this.store.get().matrix ?? matrix);
        });
      }
      head.appendChild(th);
    }
    table.appendChild(head);

    for (const row of this.sortedRows(matrix)) {
      const tr = document.createElement('tr');
      tr.dataset.incident = row.incident.name;
      const cells = [
        row.incident.name,
        row.incident.impact,
        row.incident.severity,
        row.capability.display,
        row.display_score,
      ];
      for (const text of cells) {
        const td = document.createElement('td');
        td.textContent = text;
        tr.appendChild(td);
      }
      const levelCell = document.createElement('td');
      levelCell.appendChild(levelBadge(row.level));
      tr.appendChild(levelCell);
      table.appendChild(tr);
    }
    this.root.appendChild(table);
  }

  private async advance(matrixId: string): Promise<void> {
    this.store.update({ pending: true, error: null });
    try {
      const matrix = await this.api.advanceReview(matrixId);
      this.store.update({ matrix, pending: false });
      this.render(matrix);
    } catch (err) {
      this.store.update({ pending: false, error: String(err) });
    }
  }
}
