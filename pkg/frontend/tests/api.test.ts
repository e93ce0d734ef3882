import { afterEach, describe, expect, it, vi } from 'vitest';

import { ApiClient, ApiError } from '../src/api';

function mockFetch(status: number, payload: unknown) {
  const fn = vi.fn(async () => ({
    ok: status >= 200 && status < 300,
    status,
    statusText: 'status',
    json: async () => payload,
  }));
  vi.stubGlobal('fetch', fn);
  return fn;
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe('ApiClient', () => {
  it('sends what-if requests with snapshot, overrides, and incident', async () => {
    const fetchMock = mockFetch(200, { old: {}, new: {} });
    const client = new ApiClient('http://api.test');

    await client.whatIf('snap-1', { 'Internal and External Communication': 4 }, 'Phishing Attacks');

    expect(fetchMock).toHaveBeenCalledOnce();
    const [url, init] = fetchMock.mock.calls[0] as unknown as [string, RequestInit];
    expect(url).toBe('http://api.test/api/whatif');
    expect(JSON.parse(init.body as string)).toEqual({
      snapshot_id: 'snap-1',
      overrides: { 'Internal and External Communication': 4 },
      incident: 'Phishing Attacks',
    });
  });

  it('encodes the org unit in history queries', async () => {
    const fetchMock = mockFetch(200, { org_unit: 'A B', snapshots: [] });
    await new ApiClient('').history('A B');
    const [url] = fetchMock.mock.calls[0] as unknown as [string];
    expect(url).toBe('/api/assessments?org_unit=A%20B');
  });

  it('raises ApiError with the server-provided kind', async () => {
    mockFetch(422, { error: { kind: 'MissingArea', message: 'missing assessment' } });
    const client = new ApiClient('');
    const failure = await client
      .recordAssessment('HQ', '2024-01-01T00:00:00Z', [])
      .catch((err: unknown) => err);
    expect(failure).toBeInstanceOf(ApiError);
    expect((failure as ApiError).kind).toBe('MissingArea');
    expect((failure as ApiError).status).toBe(422);
  });

  it('posts review advancement to the matrix review endpoint', async () => {
    const fetchMock = mockFetch(200, { id: 'm2', review_status: 'PeerReviewed', rows: [] });
    await new ApiClient('').advanceReview('m1');
    const [url, init] = fetchMock.mock.calls[0] as unknown as [string, RequestInit];
    expect(url).toBe('/api/matrix/m1/review');
    expect(init.method).toBe('POST');
  });
});
