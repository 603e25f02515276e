/**
 * Typed client for the planning service. All numbers displayed anywhere in
 * the UI come from these responses; the client never derives one.
 */

export type ModeName = 'from_scratch' | 'continued_pretrain';
export type SourceType = 'explicit' | 'from_disk' | 'chinchilla_optimal';
export type PlanType = 'reserved' | 'on_demand' | 'custom';
export type SweepField = 'model' | 'disk_gb' | 'tokens' | 'epochs' | 'gpu_count' | 'rate';

export interface TokenSourceRequest {
  type: SourceType;
  tokens?: number;
  gb?: number;
  ratio?: number;
}

export interface PlanRequest {
  type: PlanType;
  rate?: number;
}

export interface ScenarioRequest {
  mode: ModeName;
  params: number;
  token_source: TokenSourceRequest;
  epochs: number;
  gpu_count: number;
  plan: PlanRequest;
  overhead_multiplier: number;
}

export interface EstimateResponse {
  tokens: number;
  dataset_gb: number;
  flops: number;
  gpu_hours: number;
  wall_clock_hours: number;
  usd: number;
  project_usd: number;
  project_gpu_hours: number;
  usd_display: string;
  time_display: string;
  tokens_display: string;
  dataset_display: string;
  project_usd_display: string;
  mode?: string;
  model_params?: number;
}

export interface SweepPointResponse {
  value: number;
  estimate: EstimateResponse | null;
  error: string | null;
}

export interface SweepResponse {
  field: SweepField;
  points: SweepPointResponse[];
}

export interface PretrainRowResponse extends EstimateResponse {
  model_params: number;
  params_display: string;
  example_model: string;
}

export interface PretrainTableResponse {
  rows: PretrainRowResponse[];
}

export interface ContinuedTableResponse {
  model_sizes: number[];
  model_displays: string[];
  disk_sizes_gb: number[];
  disk_displays: string[];
  usd: number[][];
  usd_display: string[][];
}

export interface FieldError {
  field?: string;
  message: string;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public errors: FieldError[],
  ) {
    super(errors.map((e) => (e.field ? `${e.field}: ${e.message}` : e.message)).join('; '));
    this.name = 'ApiError';
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(path, init);
  const body = await response.json().catch(() => null);
  if (!response.ok) {
    const errors: FieldError[] =
      body && Array.isArray(body.errors) ? body.errors : [{ message: `HTTP ${response.status}` }];
    throw new ApiError(response.status, errors);
  }
  return body as T;
}

function post<T>(path: string, payload: unknown): Promise<T> {
  return request<T>(path, {
    method: 'POST',
    headers: { 'content-type': 'application/json' },
    body: JSON.stringify(payload),
  });
}

export class ApiClient {
  constructor(private base = '/api/v1') {}

  constants(): Promise<Record<string, number>> {
    return request(`${this.base}/constants`);
  }

  estimate(scenario: ScenarioRequest): Promise<EstimateResponse> {
    return post(`${this.base}/estimate`, scenario);
  }

  sweep(base: ScenarioRequest, field: SweepField, values: number[]): Promise<SweepResponse> {
    return post(`${this.base}/sweep`, { base, field, values });
  }

  pretrainTable(): Promise<PretrainTableResponse> {
    return request(`${this.base}/tables/pretrain`);
  }

  continuedTable(): Promise<ContinuedTableResponse> {
    return request(`${this.base}/tables/continued`);
  }
}
