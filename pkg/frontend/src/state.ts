/**
 * Shared dashboard state. Views read from here and subscribe to changes;
 * every numeric field is a payload the API returned, never a client-side
 * computation.
 */

import type { CatalogDoc, MatrixDoc, RegistryDoc, SnapshotDoc, SnapshotSummaryDoc } from './types';

export interface DashboardState {
  registry: RegistryDoc | null;
  catalog: CatalogDoc | null;
  snapshot: SnapshotDoc | null;
  matrix: MatrixDoc | null;
  history: SnapshotSummaryDoc[];
  pending: boolean;
  error: string | null;
}

type Listener = (state: DashboardState) => void;

export class Store {
  private state: DashboardState = {
    registry: null,
    catalog: null,
    snapshot: null,
    matrix: null,
    history: [],
    pending: false,
    error: null,
  };

  private listeners: Listener[] = [];

  get(): DashboardState {
    return this.state;
  }

  update(patch: Partial<DashboardState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener(this.state);
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }
}

/** Current per-area scores of the active snapshot, by area name. */
export function currentScores(snapshot: SnapshotDoc): Record<string, number> {
  const scores: Record<string, number> = {};
  for (const entry of snapshot.entries) scores[entry.area] = entry.score;
  return scores;
}
