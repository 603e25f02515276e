/**
 * Derivation breadcrumbs: how the planner got from the scenario to each
 * number, step by step, using the tool's formula numbering (1)-(5). Every
 * value shown is taken directly from the estimate response.
 */

import type { EstimateResponse, ScenarioRequest } from './api';

export interface Breadcrumb {
  formula: string;
  label: string;
  rule: string;
  value: string;
}

export function breadcrumbs(request: ScenarioRequest, estimate: EstimateResponse): Breadcrumb[] {
  const steps: Breadcrumb[] = [];
  const source = request.token_source.type;

  if (source === 'chinchilla_optimal') {
    steps.push({
      formula: '(1)',
      label: 'Compute-optimal token budget',
      rule: 'log10(tokens) = (log10(params) + 0.8981) / 0.9606',
      value: estimate.tokens_display,
    });
  } else if (source === 'from_disk') {
    steps.push({
      formula: '(5)',
      label: 'Tokens from corpus size',
      rule: 'tokens = GB on disk x tokens/GB density',
      value: estimate.tokens_display,
    });
  } else {
    steps.push({
      formula: '',
      label: 'Token budget (as given)',
      rule: 'taken directly from the scenario',
      value: estimate.tokens_display,
    });
  }

  steps.push({
    formula: '(2)',
    label: 'Training compute',
    rule:
      request.epochs === 1
        ? 'FLOPs = 6 x params x tokens'
        : `FLOPs = 6 x params x tokens x ${request.epochs} epochs`,
    value: `${estimate.flops.toExponential(4)} FLOPs`,
  });

  steps.push({
    formula: '(3)',
    label: 'GPU time',
    rule: 'GPU-hours = FLOPs / per-GPU throughput',
    value: `${estimate.gpu_hours.toExponential(4)} GPU-hours`,
  });

  steps.push({
    formula: '(4)',
    label: 'Budget',
    rule: 'cost = GPU-hours x hourly rate',
    value: estimate.usd_display,
  });

  steps.push({
    formula: '',
    label: `Wall clock on ${request.gpu_count} GPU${request.gpu_count === 1 ? '' : 's'}`,
    rule: 'elapsed = GPU-hours / fleet size',
    value: estimate.time_display,
  });

  steps.push({
    formula: '(5)',
    label: 'Data on disk',
    rule: 'GB = tokens / tokens-per-GB density',
    value: estimate.dataset_display,
  });

  if (request.overhead_multiplier !== 1) {
    steps.push({
      formula: '',
      label: 'Whole project',
      rule: `single run x ${request.overhead_multiplier} overhead multiplier`,
      value: estimate.project_usd_display,
    });
  }

  return steps;
}
