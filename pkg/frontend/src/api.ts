import type {
  ConjectureRequest,
  ConjectureRunDto,
  FalsificationDto,
  GraphSummaryDto,
  InvariantDescriptor,
} from './types';

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function parseError(resp: Response): Promise<never> {
  let detail = resp.statusText;
  try {
    const body = await resp.json();
    if (typeof body.detail === 'string') detail = body.detail;
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(resp.status, detail);
}

export class ApiClient {
  constructor(private baseUrl: string = '') {}

  private async get<T>(path: string): Promise<T> {
    const resp = await fetch(`${this.baseUrl}${path}`);
    if (!resp.ok) await parseError(resp);
    return resp.json();
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    const resp = await fetch(`${this.baseUrl}${path}`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(body),
    });
    if (!resp.ok) await parseError(resp);
    return resp.json();
  }

  listInvariants(): Promise<InvariantDescriptor[]> {
    return this.get('/api/invariants');
  }

  requestConjectures(request: ConjectureRequest): Promise<ConjectureRunDto> {
    return this.post('/api/conjectures', request);
  }

  listGraphs(): Promise<GraphSummaryDto[]> {
    return this.get('/api/graphs');
  }

  submitGraph(id: string, edgeList: string): Promise<FalsificationDto> {
    return this.post('/api/graphs', { id, edge_list: edgeList });
  }
}
