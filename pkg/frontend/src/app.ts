/**
 * The planner application: a scenario form with live estimates, derivation
 * breadcrumbs, sweep charts, and the reference tables. The client performs
 * no cost arithmetic; every displayed figure is taken from a service
 * response.
 */

import {
  ApiClient,
  ApiError,
  type ContinuedTableResponse,
  type EstimateResponse,
  type PretrainTableResponse,
  type ScenarioRequest,
  type SweepField,
} from './api';
import { breadcrumbs } from './breadcrumbs';
import { renderChart } from './chart';
import {
  DEFAULT_STATE,
  decodeState,
  encodeState,
  parseValuesList,
  validate,
  type FieldErrors,
  type ScenarioFormState,
} from './state';

export interface AppOptions {
  /** Edit-to-request debounce; live estimates feel instant at 150 ms. */
  debounceMs?: number;
  /** Initial query string; defaults to window.location.search. */
  query?: string;
  /** Receives the encoded query on every state change. */
  onQueryChange?: (query: string) => void;
}

const SWEEP_PRESETS: Record<string, string> = {
  'model sizes': '1.5e9, 7e9, 13e9, 33e9, 65e9, 175e9',
  'corpus sizes (GB)': '20, 100, 500, 1000, 5000, 10000',
};

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

export class App {
  private state: ScenarioFormState = { ...DEFAULT_STATE };
  private requestSeq = 0;
  private appliedSeq = 0;
  private debounceTimer: ReturnType<typeof setTimeout> | null = null;
  private urlWarning = false;

  constructor(
    private root: HTMLElement,
    private client: ApiClient,
    private options: AppOptions = {},
  ) {}

  async init(): Promise<void> {
    let constants: Record<string, number>;
    try {
      constants = await this.client.constants();
    } catch {
      this.renderBlockingBanner();
      return;
    }
    const decoded = decodeState(this.options.query ?? window.location.search);
    this.state = decoded.state;
    this.urlWarning = decoded.warning;
    this.renderShell(constants);
    this.syncUrl();
    await this.estimateNow();
    void this.loadTables();
  }

  getState(): ScenarioFormState {
    return { ...this.state };
  }

  private renderBlockingBanner(): void {
    this.root.innerHTML = `
      <div class="banner error" role="alert" data-testid="api-banner">
        <p>The planning service is unreachable. No numbers can be shown.</p>
        <button type="button" data-testid="banner-retry">Retry</button>
      </div>`;
    this.root
      .querySelector('[data-testid="banner-retry"]')!
      .addEventListener('click', () => void this.init());
  }

  private renderShell(constants: Record<string, number>): void {
    const constantRows = Object.entries(constants)
      .map(
        (entry) =>
          `<tr><td>${escapeHtml(entry[0])}</td><td>${
            entry[1] >= 1e6 ? entry[1].toExponential() : entry[1]
          }</td></tr>`,
      )
      .join('');
    const presetButtons = Object.keys(SWEEP_PRESETS)
      .map(
        (name) =>
          `<button type="button" class="preset" data-preset="${escapeHtml(name)}">${escapeHtml(name)}</button>`,
      )
      .join(' ');

    this.root.innerHTML = `
      <main class="planner">
        <h1>LLM pretraining planner</h1>
        ${this.urlWarning ? '<div class="banner warning" role="alert" data-testid="url-warning">The shared link was invalid; defaults were restored.</div>' : ''}
        <div class="columns">
        <form class="scenario" autocomplete="off">
          <fieldset>
            <legend>Scenario</legend>
            <label>Training mode
              <select data-field="mode">
                <option value="from_scratch">pretrain from scratch</option>
                <option value="continued_pretrain">continued pretraining</option>
              </select>
            </label>
            <label>Model size (parameters)
              <input data-field="params" type="text" inputmode="decimal" />
              <span class="field-error" data-error-for="params" role="alert"></span>
            </label>
            <label>Token budget
              <select data-field="sourceType">
                <option value="chinchilla_optimal">compute-optimal for the model size</option>
                <option value="from_disk">from corpus size on disk</option>
                <option value="explicit">explicit token count</option>
              </select>
              <span class="field-error" data-error-for="sourceType" role="alert"></span>
            </label>
            <label data-group="tokens">Tokens
              <input data-field="tokens" type="text" inputmode="decimal" />
              <span class="field-error" data-error-for="tokens" role="alert"></span>
            </label>
            <label data-group="gb">Corpus size (decimal GB)
              <input data-field="gb" type="text" inputmode="decimal" />
              <span class="field-error" data-error-for="gb" role="alert"></span>
            </label>
            <label data-group="ratio">Density (tokens per GB, blank = default)
              <input data-field="ratio" type="text" inputmode="decimal" />
              <span class="field-error" data-error-for="ratio" role="alert"></span>
            </label>
            <label>Epochs
              <input data-field="epochs" type="text" inputmode="decimal" />
              <span class="field-error" data-error-for="epochs" role="alert"></span>
            </label>
            <label>GPU count
              <input data-field="gpuCount" type="text" inputmode="numeric" />
              <span class="field-error" data-error-for="gpuCount" role="alert"></span>
            </label>
            <label>Pricing plan
              <select data-field="planType">
                <option value="reserved">reserved ($3/h)</option>
                <option value="on_demand">on-demand ($5/h)</option>
                <option value="custom">custom rate</option>
              </select>
            </label>
            <label data-group="customRate">Custom rate (USD per GPU-hour)
              <input data-field="customRate" type="text" inputmode="decimal" />
              <span class="field-error" data-error-for="customRate" role="alert"></span>
            </label>
            <label>Overhead multiplier (1 = single run, 5.14 = published dev lower bound)
              <input data-field="overhead" type="text" inputmode="decimal" />
              <span class="field-error" data-error-for="overhead" role="alert"></span>
            </label>
          </fieldset>
        </form>

        <section class="results" aria-live="polite" data-testid="result-panel">
          <h2>Estimate</h2>
          <p class="status" data-testid="status"></p>
          <div data-testid="result-body"></div>
        </section>
        </div>

        <section class="sweep">
          <h2>Sweep</h2>
          <label>Vary
            <select data-field="sweepField">
              <option value="model">model size</option>
              <option value="disk_gb">corpus size (GB)</option>
              <option value="tokens">token budget</option>
              <option value="epochs">epochs</option>
              <option value="gpu_count">GPU count</option>
              <option value="rate">hourly rate</option>
            </select>
          </label>
          <label>Values (comma separated)
            <input data-field="sweepValues" type="text" />
            <span class="field-error" data-error-for="sweepValues" role="alert"></span>
          </label>
          ${presetButtons}
          <label>Axes
            <select data-field="chartScale">
              <option value="log">log</option>
              <option value="linear">linear</option>
            </select>
          </label>
          <button type="button" data-testid="run-sweep">Run sweep</button>
          <div class="chart-host" data-testid="chart-host" aria-live="polite"></div>
        </section>

        <section class="tables">
          <h2>Reference tables</h2>
          <p>Click any row or cell to load that scenario into the form.</p>
          <div data-testid="pretrain-table"></div>
          <div data-testid="continued-table"></div>
        </section>

        <details class="constants">
          <summary>Calibration constants</summary>
          <table data-testid="constants-table"><tbody>${constantRows}</tbody></table>
        </details>
      </main>`;

    for (const input of this.root.querySelectorAll<HTMLInputElement | HTMLSelectElement>('[data-field]')) {
      const field = input.dataset.field as keyof ScenarioFormState;
      input.value = this.state[field];
      const onEdit = () => {
        (this.state as unknown as Record<string, string>)[field] = input.value;
        this.syncUrl();
        if (field === 'sweepField' || field === 'sweepValues' || field === 'chartScale') return;
        this.updateVisibility();
        this.scheduleEstimate();
      };
      input.addEventListener('input', onEdit);
      input.addEventListener('change', onEdit);
    }
    for (const button of this.root.querySelectorAll<HTMLButtonElement>('.preset')) {
      button.addEventListener('click', () => {
        this.state.sweepValues = SWEEP_PRESETS[button.dataset.preset!];
        this.field('sweepValues').value = this.state.sweepValues;
        this.syncUrl();
      });
    }
    this.root
      .querySelector('[data-testid="run-sweep"]')!
      .addEventListener('click', () => void this.runSweep());
    this.updateVisibility();
  }

  private field(name: keyof ScenarioFormState): HTMLInputElement {
    return this.root.querySelector(`[data-field="${name}"]`) as HTMLInputElement;
  }

  private updateVisibility(): void {
    const groups: Record<string, boolean> = {
      tokens: this.state.sourceType === 'explicit',
      gb: this.state.sourceType === 'from_disk',
      ratio: this.state.sourceType === 'from_disk',
      customRate: this.state.planType === 'custom',
    };
    for (const [group, visible] of Object.entries(groups)) {
      const node = this.root.querySelector<HTMLElement>(`[data-group="${group}"]`);
      if (node) node.hidden = !visible;
    }
  }

  private syncUrl(): void {
    const query = encodeState(this.state);
    if (this.options.onQueryChange) this.options.onQueryChange(query);
    else window.history.replaceState(null, '', `?${query}`);
  }

  private scheduleEstimate(): void {
    if (this.debounceTimer !== null) clearTimeout(this.debounceTimer);
    this.debounceTimer = setTimeout(() => {
      this.debounceTimer = null;
      void this.estimateNow();
    }, this.options.debounceMs ?? 150);
  }

  private setStatus(text: string): void {
    const status = this.root.querySelector('[data-testid="status"]');
    if (status) status.textContent = text;
  }

  private renderFieldErrors(errors: FieldErrors & { sweepValues?: string }): void {
    for (const span of this.root.querySelectorAll<HTMLElement>('[data-error-for]')) {
      const field = span.dataset.errorFor as keyof ScenarioFormState;
      span.textContent = errors[field] ?? '';
    }
  }

  async estimateNow(): Promise<void> {
    const { request, errors } = validate(this.state);
    this.renderFieldErrors(errors);
    if (!request) {
      this.setStatus('fix the highlighted fields to get an estimate');
      return;
    }
    const seq = ++this.requestSeq;
    this.setStatus('estimating…');
    try {
      const estimate = await this.client.estimate(request);
      if (seq <= this.appliedSeq) return; // a newer response already rendered
      this.appliedSeq = seq;
      this.renderResult(request, estimate);
      this.setStatus('');
    } catch (error) {
      if (seq <= this.appliedSeq) return;
      this.appliedSeq = seq;
      if (error instanceof ApiError && (error.status === 400 || error.status === 422)) {
        const mapped: Record<string, string> = {};
        for (const item of error.errors) {
          const field = this.serverFieldToFormField(item.field ?? '');
          mapped[field] = item.message;
        }
        this.renderFieldErrors(mapped as FieldErrors);
        this.setStatus('the service rejected the scenario');
      } else {
        this.setStatus('the planning service is unreachable; showing no numbers');
      }
    }
  }

  private serverFieldToFormField(field: string): string {
    if (field.startsWith('token_source')) return 'sourceType';
    const table: Record<string, string> = {
      params: 'params',
      epochs: 'epochs',
      gpu_count: 'gpuCount',
      overhead_multiplier: 'overhead',
      plan: 'customRate',
      'plan.rate': 'customRate',
    };
    return table[field] ?? 'params';
  }

  private renderResult(request: ScenarioRequest, estimate: EstimateResponse): void {
    const steps = breadcrumbs(request, estimate)
      .map(
        (step) => `
          <li>
            <span class="formula">${escapeHtml(step.formula)}</span>
            <span class="step-label">${escapeHtml(step.label)}</span>
            <code class="rule">${escapeHtml(step.rule)}</code>
            <strong class="step-value">${escapeHtml(step.value)}</strong>
          </li>`,
      )
      .join('');
    const body = this.root.querySelector('[data-testid="result-body"]')!;
    // one innerHTML assignment keeps the panel update atomic
    body.innerHTML = `
      <dl class="headline">
        <div><dt>Cost (one run)</dt><dd data-testid="result-usd">${escapeHtml(estimate.usd_display)}</dd></div>
        <div><dt>Wall clock</dt><dd data-testid="result-time">${escapeHtml(estimate.time_display)}</dd></div>
        <div><dt>Training tokens</dt><dd data-testid="result-tokens">${escapeHtml(estimate.tokens_display)}</dd></div>
        <div><dt>Data on disk</dt><dd data-testid="result-dataset">${escapeHtml(estimate.dataset_display)}</dd></div>
        <div><dt>Project cost</dt><dd data-testid="result-project">${escapeHtml(estimate.project_usd_display)}</dd></div>
      </dl>
      <h3>How these numbers were derived</h3>
      <ol class="breadcrumbs" data-testid="breadcrumbs">${steps}</ol>`;
  }

  async runSweep(): Promise<void> {
    const { request, errors } = validate(this.state);
    const values = parseValuesList(this.state.sweepValues);
    const allErrors = { ...errors } as FieldErrors & { sweepValues?: string };
    if (values === null) {
      allErrors.sweepValues = 'enter a comma-separated list of numbers';
    }
    this.renderFieldErrors(allErrors);
    const host = this.root.querySelector<HTMLElement>('[data-testid="chart-host"]')!;
    if (!request || values === null) return;
    if (values.length === 0) {
      host.innerHTML = '<p class="hint">nothing to plot; add sweep values above</p>';
      return;
    }
    try {
      const sweep = await this.client.sweep(request, this.state.sweepField as SweepField, values);
      host.innerHTML = '';
      host.appendChild(renderChart(sweep.points, this.state.chartScale));
      const failures = sweep.points.filter((p) => p.error);
      if (failures.length > 0) {
        const list = document.createElement('ul');
        list.className = 'sweep-errors';
        for (const failure of failures) {
          const item = document.createElement('li');
          item.textContent = `${failure.value}: ${failure.error}`;
          list.appendChild(item);
        }
        host.appendChild(list);
      }
    } catch (error) {
      host.innerHTML = `<p class="hint error">sweep failed: ${escapeHtml(
        error instanceof Error ? error.message : String(error),
      )}</p>`;
    }
  }

  private async loadTables(): Promise<void> {
    const pretrainHost = this.root.querySelector<HTMLElement>('[data-testid="pretrain-table"]')!;
    const continuedHost = this.root.querySelector<HTMLElement>('[data-testid="continued-table"]')!;
    try {
      const [pretrain, continued] = await Promise.all([
        this.client.pretrainTable(),
        this.client.continuedTable(),
      ]);
      this.renderPretrainTable(pretrainHost, pretrain);
      this.renderContinuedTable(continuedHost, continued);
    } catch {
      pretrainHost.innerHTML =
        '<p class="hint error">reference tables failed to load <button type="button" data-testid="tables-retry">Retry</button></p>';
      continuedHost.innerHTML = '';
      pretrainHost
        .querySelector('[data-testid="tables-retry"]')!
        .addEventListener('click', () => void this.loadTables());
    }
  }

  private renderPretrainTable(host: HTMLElement, table: PretrainTableResponse): void {
    const rows = table.rows
      .map(
        (row, i) => `
          <tr><td>
            <button type="button" class="cell" data-row="${i}">${escapeHtml(row.params_display)}</button>
          </td>
          <td>${escapeHtml(row.example_model)}</td>
          <td>${escapeHtml(row.tokens_display)}</td>
          <td>${escapeHtml(row.dataset_display)}</td>
          <td>${escapeHtml(row.usd_display)}</td>
          <td>${escapeHtml(row.time_display)}</td></tr>`,
      )
      .join('');
    host.innerHTML = `
      <h3>Pretraining from scratch (one epoch, one reserved GPU)</h3>
      <table>
        <thead><tr><th>Model size</th><th>Example model</th><th>Optimal tokens</th>
        <th>Database size</th><th>Cost (USD)</th><th>Training time</th></tr></thead>
        <tbody>${rows}</tbody>
      </table>`;
    for (const button of host.querySelectorAll<HTMLButtonElement>('button.cell')) {
      button.addEventListener('click', () => {
        const row = table.rows[Number(button.dataset.row)];
        this.loadScenario({
          mode: 'from_scratch',
          sourceType: 'chinchilla_optimal',
          params: String(row.model_params),
        });
      });
    }
  }

  private renderContinuedTable(host: HTMLElement, table: ContinuedTableResponse): void {
    const header = table.model_displays.map((name) => `<th>${escapeHtml(name)}</th>`).join('');
    const rows = table.disk_displays
      .map((disk, i) => {
        const cells = table.usd_display[i]
          .map(
            (cell, j) =>
              `<td><button type="button" class="cell" data-i="${i}" data-j="${j}">${escapeHtml(cell)}</button></td>`,
          )
          .join('');
        return `<tr><th scope="row">${escapeHtml(disk)}</th>${cells}</tr>`;
      })
      .join('');
    host.innerHTML = `
      <h3>Continued pretraining cost (USD, one epoch)</h3>
      <table>
        <thead><tr><th>Database size</th>${header}</tr></thead>
        <tbody>${rows}</tbody>
      </table>`;
    for (const button of host.querySelectorAll<HTMLButtonElement>('button.cell')) {
      button.addEventListener('click', () => {
        const i = Number(button.dataset.i);
        const j = Number(button.dataset.j);
        this.loadScenario({
          mode: 'continued_pretrain',
          sourceType: 'from_disk',
          params: String(table.model_sizes[j]),
          gb: String(table.disk_sizes_gb[i]),
        });
      });
    }
  }

  private loadScenario(changes: Partial<ScenarioFormState>): void {
    Object.assign(this.state, changes);
    for (const [field, value] of Object.entries(changes)) {
      const input = this.root.querySelector<HTMLInputElement>(`[data-field="${field}"]`);
      if (input) input.value = value as string;
    }
    this.updateVisibility();
    this.renderFieldErrors({});
    this.syncUrl();
    void this.estimateNow();
  }
}
