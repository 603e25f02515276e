/**
 * Hand-rolled SVG line chart for sweep results: cost against the swept
 * value, selectable linear/log axes, hover details per point, and gaps
 * where the service reported a per-point error. Coordinate mapping is the
 * only math here; every labelled number is echoed from the response.
 */

import type { SweepPointResponse } from './api';
import type { ChartScale } from './state';

const SVG_NS = 'http://www.w3.org/2000/svg';
const WIDTH = 640;
const HEIGHT = 280;
const PAD = { left: 70, right: 16, top: 12, bottom: 30 };

interface Mapped {
  point: SweepPointResponse;
  px: number;
  py: number;
}

function positions(values: number[], scale: ChartScale): number[] {
  const usable = scale === 'log' && values.every((v) => v > 0);
  const mapped = usable ? values.map(Math.log10) : values;
  const lo = Math.min(...mapped);
  const hi = Math.max(...mapped);
  const span = hi - lo || 1;
  return mapped.map((v) => (v - lo) / span);
}

function el<K extends keyof SVGElementTagNameMap>(
  name: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, name);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  return node;
}

export function renderChart(points: SweepPointResponse[], scale: ChartScale): SVGSVGElement {
  const svg = el('svg', {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    width: String(WIDTH),
    height: String(HEIGHT),
    role: 'img',
    'aria-label': 'sweep results chart',
    class: 'sweep-chart',
  });

  const valid = points.filter((p) => p.estimate !== null);
  if (valid.length === 0) {
    const hint = el('text', { x: String(WIDTH / 2), y: String(HEIGHT / 2), 'text-anchor': 'middle' });
    hint.textContent = 'no plottable points';
    svg.appendChild(hint);
    return svg;
  }

  const xs = positions(valid.map((p) => p.value), scale);
  const ys = positions(valid.map((p) => p.estimate!.usd), scale);
  const plotW = WIDTH - PAD.left - PAD.right;
  const plotH = HEIGHT - PAD.top - PAD.bottom;
  const mappedByIndex = new Map<SweepPointResponse, Mapped>();
  valid.forEach((point, i) => {
    mappedByIndex.set(point, {
      point,
      px: PAD.left + xs[i] * plotW,
      py: PAD.top + (1 - ys[i]) * plotH,
    });
  });

  svg.appendChild(el('rect', {
    x: String(PAD.left), y: String(PAD.top),
    width: String(plotW), height: String(plotH),
    class: 'chart-plot-area', fill: 'none', stroke: 'currentColor', 'stroke-opacity': '0.2',
  }));

  // polyline segments, broken at error points so failures render as gaps
  let segment: Mapped[] = [];
  const flush = () => {
    if (segment.length >= 2) {
      const path = segment.map((m, i) => `${i === 0 ? 'M' : 'L'}${m.px.toFixed(1)},${m.py.toFixed(1)}`).join(' ');
      svg.appendChild(el('path', { d: path, fill: 'none', stroke: 'currentColor', 'stroke-width': '1.5', class: 'chart-line' }));
    }
    segment = [];
  };
  for (const point of points) {
    const mapped = mappedByIndex.get(point);
    if (mapped) segment.push(mapped);
    else flush();
  }
  flush();

  for (const { point, px, py } of mappedByIndex.values()) {
    const dot = el('circle', { cx: String(px), cy: String(py), r: '4', class: 'chart-dot', tabindex: '0' });
    const estimate = point.estimate!;
    const title = document.createElementNS(SVG_NS, 'title');
    title.textContent =
      `${point.value}: ${estimate.usd_display}, ${estimate.time_display}, ` +
      `${estimate.tokens_display} tokens, ${estimate.dataset_display} on disk`;
    dot.appendChild(title);
    svg.appendChild(dot);
  }

  // endpoint labels come straight from the response points
  const first = valid[0];
  const last = valid[valid.length - 1];
  const cheapest = valid.reduce((a, b) => (a.estimate!.usd <= b.estimate!.usd ? a : b));
  const dearest = valid.reduce((a, b) => (a.estimate!.usd >= b.estimate!.usd ? a : b));
  const label = (x: number, y: number, text: string, anchor: string) => {
    const node = el('text', { x: String(x), y: String(y), 'text-anchor': anchor, class: 'chart-label' });
    node.textContent = text;
    svg.appendChild(node);
  };
  label(PAD.left, HEIGHT - 8, String(first.value), 'start');
  label(WIDTH - PAD.right, HEIGHT - 8, String(last.value), 'end');
  label(PAD.left - 6, HEIGHT - PAD.bottom, cheapest.estimate!.usd_display, 'end');
  label(PAD.left - 6, PAD.top + 10, dearest.estimate!.usd_display, 'end');

  return svg;
}
