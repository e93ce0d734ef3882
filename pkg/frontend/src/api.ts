/**
 * Thin typed client for the scoring API. Every number the dashboard shows
 * comes straight from these payloads.
 */

import type {
  AssessmentEntryInput,
  BranchMatrixDoc,
  CatalogDoc,
  GapReportDoc,
  HistoryDoc,
  MatrixDoc,
  RegistryDoc,
  SelectionDoc,
  SnapshotDoc,
  WhatIfDoc,
} from './types';

export class ApiError extends Error {
  constructor(
    public readonly kind: string,
    message: string,
    public readonly status: number,
  ) {
    super(message);
  }
}

declare global {
  interface Window {
    IRPRIORITY_API_BASE?: string;
  }
}

/** Base URL precedence: ?api= query param, window override, same origin. */
export function resolveApiBase(): string {
  if (typeof window === 'undefined') return '';
  const fromQuery = new URLSearchParams(window.location.search).get('api');
  if (fromQuery) return fromQuery.replace(/\/$/, '');
  if (window.IRPRIORITY_API_BASE) return window.IRPRIORITY_API_BASE.replace(/\/$/, '');
  return '';
}

async function request<T>(base: string, method: string, path: string, body?: unknown): Promise<T> {
  const response = await fetch(`${base}${path}`, {
    method,
    headers: body === undefined ? {} : { 'Content-Type': 'application/json' },
    body: body === undefined ? undefined : JSON.stringify(body),
  });
  const payload = await response.json();
  if (!response.ok) {
    const err = payload?.error ?? { kind: 'Unknown', message: response.statusText };
    throw new ApiError(err.kind, err.message, response.status);
  }
  return payload as T;
}

export class ApiClient {
  constructor(private readonly base: string = resolveApiBase()) {}

  getModels(): Promise<RegistryDoc> {
    return request(this.base, 'GET', '/api/models');
  }

  selectBest(): Promise<SelectionDoc> {
    return request(this.base, 'POST', '/api/selection/best', {});
  }

  selectCompliance(regime: string): Promise<SelectionDoc> {
    return request(this.base, 'POST', '/api/selection/compliance', { regime });
  }

  recordAssessment(
    orgUnit: string,
    takenAt: string,
    entries: AssessmentEntryInput[],
  ): Promise<SnapshotDoc> {
    return request(this.base, 'POST', '/api/assessments', {
      org_unit: orgUnit,
      taken_at: takenAt,
      entries,
    });
  }

  history(orgUnit: string): Promise<HistoryDoc> {
    return request(this.base, 'GET', `/api/assessments?org_unit=${encodeURIComponent(orgUnit)}`);
  }

  gap(snapshotId: string, targets?: Record<string, number>): Promise<GapReportDoc> {
    return request(this.base, 'POST', '/api/gap', { snapshot_id: snapshotId, targets });
  }

  getCatalog(): Promise<CatalogDoc> {
    return request(this.base, 'GET', '/api/catalog');
  }

  buildMatrix(snapshotId: string): Promise<MatrixDoc> {
    return request(this.base, 'POST', '/api/matrix', { snapshot_id: snapshotId });
  }

  advanceReview(matrixId: string): Promise<MatrixDoc> {
    return request(this.base, 'POST', `/api/matrix/${matrixId}/review`, {});
  }

  branchMatrix(
    incident: string,
    branches: { org_unit: string; capability: string }[],
  ): Promise<BranchMatrixDoc> {
    return request(this.base, 'POST', '/api/matrix/branches', { incident, branches });
  }

  branchMatrixFromSnapshots(incident: string, snapshotIds: string[]): Promise<BranchMatrixDoc> {
    return request(this.base, 'POST', '/api/matrix/branches', {
      incident,
      snapshot_ids: snapshotIds,
    });
  }

  whatIf(
    snapshotId: string,
    overrides: Record<string, number>,
    incident: string,
  ): Promise<WhatIfDoc> {
    return request(this.base, 'POST', '/api/whatif', {
      snapshot_id: snapshotId,
      overrides,
      incident,
    });
  }
}
