/**
 * Wire types mirroring the API's JSON payloads.
 *
 * Numbers arrive as exact rationals with a ready-made display string;
 * the dashboard renders `display` and never recomputes or re-rounds.
 */

export interface RationalDoc {
  num: number;
  den: number;
  display: string;
}

export type PriorityLevelName = 'Low' | 'Medium' | 'High' | 'Critical';
export type ReviewStatusName = 'Draft' | 'PeerReviewed' | 'ManagementApproved';

export interface NativeLevelDoc {
  name: string;
  ordinal: number;
  canonical_score: number;
}

export interface ModelDoc {
  id: string;
  display_name: string;
  description: string;
  levels: NativeLevelDoc[];
}

export interface RegistryDoc {
  areas: string[];
  canonical_levels: { score: number; name: string }[];
  models: ModelDoc[];
  effectiveness: { model: string; area: string; score: number }[];
}

export interface SelectionDoc {
  rationale: string;
  assignments: Record<string, string>;
}

export interface AssessmentEntryInput {
  area: string;
  model: string;
  level: string;
  notes?: string;
}

export interface SnapshotEntryDoc {
  area: string;
  model: string;
  level: string;
  score: number;
  notes: string | null;
}

export interface SnapshotDoc {
  id: string;
  org_unit: string;
  taken_at: string;
  entries: SnapshotEntryDoc[];
  average: RationalDoc;
}

export interface SnapshotSummaryDoc {
  id: string;
  org_unit: string;
  taken_at: string;
  average: RationalDoc;
}

export interface HistoryDoc {
  org_unit: string;
  snapshots: SnapshotSummaryDoc[];
}

export interface GapEntryDoc {
  area: string;
  current: number;
  target: number;
  gap: number;
  met: boolean;
}

export interface GapReportDoc {
  snapshot_id: string;
  entries: GapEntryDoc[];
}

export interface IncidentDoc {
  name: string;
  impact: string;
  severity: string;
}

export interface CatalogDoc {
  incidents: IncidentDoc[];
}

export interface PriorityRowDoc {
  incident: IncidentDoc;
  impact_score: number;
  severity_score: number;
  capability: RationalDoc;
  score: RationalDoc;
  display_score: string;
  level: PriorityLevelName;
}

export interface MatrixDoc {
  id: string;
  snapshot_id: string;
  review_status: ReviewStatusName;
  created_at: string | null;
  rows: PriorityRowDoc[];
  replaces?: string;
}

export interface BranchRowDoc {
  org_unit: string;
  capability: RationalDoc;
  score: RationalDoc;
  display_score: string;
  level: PriorityLevelName;
}

export interface BranchMatrixDoc {
  incident: IncidentDoc;
  rows: BranchRowDoc[];
}

export interface WhatIfDoc {
  old: PriorityRowDoc;
  new: PriorityRowDoc;
}

export interface ApiErrorDoc {
  error: { kind: string; message: string };
}
