/**
 * Presentation helpers. Band colors derive solely from the level name the
 * API returned; the client never re-derives a band from a number.
 */

import type { PriorityLevelName } from './types';

export const LEVEL_COLORS: Record<PriorityLevelName, string> = {
  Low: '#2e8b57',
  Medium: '#e6a817',
  High: '#e05d2d',
  Critical: '#c0170f',
};

export function levelColor(level: PriorityLevelName): string {
  return LEVEL_COLORS[level];
}

export function levelBadge(level: PriorityLevelName): HTMLSpanElement {
  const badge = document.createElement('span');
  badge.className = `level-badge level-${level.toLowerCase()}`;
  badge.style.backgroundColor = levelColor(level);
  badge.textContent = level;
  badge.dataset.level = level;
  return badge;
}

export function formatTimestamp(iso: string): string {
  return iso.replace('T', ' ').replace(/\+00:00$|Z$/, ' UTC');
}
