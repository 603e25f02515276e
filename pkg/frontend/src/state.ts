/**
 * Form state: raw input strings (so invalid entries stay visible and
 * flagged), validation into a ScenarioRequest, and lossless URL
 * serialization for shareable links.
 */

import type { ModeName, PlanType, ScenarioRequest, SourceType, SweepField } from './api';

export type ChartScale = 'linear' | 'log';

export interface ScenarioFormState {
  mode: ModeName;
  params: string;
  sourceType: SourceType;
  tokens: string;
  gb: string;
  ratio: string;
  epochs: string;
  gpuCount: string;
  planType: PlanType;
  customRate: string;
  overhead: string;
  sweepField: SweepField;
  sweepValues: string;
  chartScale: ChartScale;
}

export const DEFAULT_STATE: ScenarioFormState = {
  mode: 'from_scratch',
  params: '65e9',
  sourceType: 'chinchilla_optimal',
  tokens: '1e12',
  gb: '500',
  ratio: '',
  epochs: '1',
  gpuCount: '1',
  planType: 'reserved',
  customRate: '3',
  overhead: '1',
  sweepField: 'model',
  sweepValues: '1.5e9, 7e9, 13e9, 33e9, 65e9, 175e9',
  chartScale: 'log',
};

const SUFFIX_SCALE: Record<string, number> = { k: 1e3, m: 1e6, b: 1e9, t: 1e12 };

/** Parse "65e9", "65B", "0.35e9", "4.4T"; null when not a number. */
export function parseQuantity(text: string): number | null {
  let raw = text.trim();
  if (!raw) return null;
  let scale = 1;
  const suffix = raw[raw.length - 1].toLowerCase();
  if (suffix in SUFFIX_SCALE) {
    scale = SUFFIX_SCALE[suffix];
    raw = raw.slice(0, -1);
  }
  if (!raw || !/^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$/.test(raw)) return null;
  const value = Number(raw) * scale;
  return Number.isFinite(value) ? value : null;
}

export function parseValuesList(text: string): number[] | null {
  const parts = text
    .split(',')
    .map((part) => part.trim())
    .filter((part) => part.length > 0);
  const values: number[] = [];
  for (const part of parts) {
    const value = parseQuantity(part);
    if (value === null) return null;
    values.push(value);
  }
  return values;
}

export type FieldErrors = Partial<Record<keyof ScenarioFormState, string>>;

export interface ValidationResult {
  request: ScenarioRequest | null;
  errors: FieldErrors;
}

/** Validate the form; a null request means at least one field is flagged. */
export function validate(state: ScenarioFormState): ValidationResult {
  const errors: FieldErrors = {};

  const params = parseQuantity(state.params);
  if (params === null || params <= 0) errors.params = 'model size must be a positive number';

  if (state.sourceType === 'chinchilla_optimal' && state.mode !== 'from_scratch') {
    errors.sourceType = 'compute-optimal budget only applies when training from scratch';
  }

  let tokenSource: ScenarioRequest['token_source'] = { type: state.sourceType };
  if (state.sourceType === 'explicit') {
    const tokens = parseQuantity(state.tokens);
    if (tokens === null || tokens <= 0) errors.tokens = 'token count must be a positive number';
    else tokenSource = { type: 'explicit', tokens };
  } else if (state.sourceType === 'from_disk') {
    const gb = parseQuantity(state.gb);
    if (gb === null || gb <= 0) errors.gb = 'corpus size must be a positive number of GB';
    const source: ScenarioRequest['token_source'] = { type: 'from_disk', gb: gb ?? 0 };
    if (state.ratio.trim() !== '') {
      const ratio = parseQuantity(state.ratio);
      if (ratio === null || ratio <= 0) errors.ratio = 'density must be a positive tokens/GB';
      else source.ratio = ratio;
    }
    tokenSource = source;
  }

  const epochs = parseQuantity(state.epochs);
  if (epochs === null || epochs < 1) errors.epochs = 'epochs must be at least 1';

  const gpuCount = parseQuantity(state.gpuCount);
  if (gpuCount === null || gpuCount < 1 || !Number.isInteger(gpuCount)) {
    errors.gpuCount = 'GPU count must be a whole number of at least 1';
  }

  const overhead = parseQuantity(state.overhead);
  if (overhead === null || overhead < 1) errors.overhead = 'overhead multiplier must be at least 1';

  let plan: ScenarioRequest['plan'] = { type: state.planType };
  if (state.planType === 'custom') {
    const rate = parseQuantity(state.customRate);
    if (rate === null || rate < 0) errors.customRate = 'custom rate must be zero or more';
    else plan = { type: 'custom', rate };
  }

  if (Object.keys(errors).length > 0) return { request: null, errors };
  return {
    request: {
      mode: state.mode,
      params: params as number,
      token_source: tokenSource,
      epochs: epochs as number,
      gpu_count: gpuCount as number,
      plan,
      overhead_multiplier: overhead as number,
    },
    errors,
  };
}

const MODES: ModeName[] = ['from_scratch', 'continued_pretrain'];
const SOURCES: SourceType[] = ['explicit', 'from_disk', 'chinchilla_optimal'];
const PLANS: PlanType[] = ['reserved', 'on_demand', 'custom'];
const SWEEP_FIELDS: SweepField[] = ['model', 'disk_gb', 'tokens', 'epochs', 'gpu_count', 'rate'];
const SCALES: ChartScale[] = ['linear', 'log'];

const URL_KEYS: Record<keyof ScenarioFormState, string> = {
  mode: 'mode',
  params: 'params',
  sourceType: 'src',
  tokens: 'tokens',
  gb: 'gb',
  ratio: 'ratio',
  epochs: 'epochs',
  gpuCount: 'gpus',
  planType: 'plan',
  customRate: 'rate',
  overhead: 'overhead',
  sweepField: 'sweep',
  sweepValues: 'values',
  chartScale: 'scale',
};

/** Encode the full form state into a URL query string. */
export function encodeState(state: ScenarioFormState): string {
  const query = new URLSearchParams();
  for (const field of Object.keys(URL_KEYS) as (keyof ScenarioFormState)[]) {
    query.set(URL_KEYS[field], state[field]);
  }
  return query.toString();
}

export interface DecodedState {
  state: ScenarioFormState;
  warning: boolean;
}

/** Restore form state from a query string; malformed input falls back to
 * the defaults with a warning flag. */
export function decodeState(query: string): DecodedState {
  const parsed = new URLSearchParams(query);
  if ([...parsed.keys()].length === 0) return { state: { ...DEFAULT_STATE }, warning: false };

  const state: ScenarioFormState = { ...DEFAULT_STATE };
  const take = (key: keyof ScenarioFormState): string | null => parsed.get(URL_KEYS[key]);

  const enums: [keyof ScenarioFormState, readonly string[]][] = [
    ['mode', MODES],
    ['sourceType', SOURCES],
    ['planType', PLANS],
    ['sweepField', SWEEP_FIELDS],
    ['chartScale', SCALES],
  ];
  for (const [field, allowed] of enums) {
    const raw = take(field);
    if (raw === null) continue;
    if (!allowed.includes(raw)) return { state: { ...DEFAULT_STATE }, warning: true };
    (state as unknown as Record<string, string>)[field] = raw;
  }

  const texts: (keyof ScenarioFormState)[] = [
    'params', 'tokens', 'gb', 'ratio', 'epochs', 'gpuCount',
    'customRate', 'overhead', 'sweepValues',
  ];
  for (const field of texts) {
    const raw = take(field);
    if (raw !== null) (state as unknown as Record<string, string>)[field] = raw;
  }

  return { state, warning: false };
}
