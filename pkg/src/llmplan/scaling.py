"""Closed-form planning math for LLM pretraining.

Converts between parameter counts, token budgets, training FLOPs, GPU-hours,
dollars, and on-disk corpus size. All quantities are plain floats; token and
parameter counts are treated as continuous values, and truncation to whole
units happens only at display time.
"""

from __future__ import annotations

import dataclasses
import math


@dataclasses.dataclass(frozen=True)
class CalibrationConstants:
    """Calibration values every estimate in this package is built on.

    The defaults encode the published A100-80G/AWS reference points:
    the log-linear compute-optimal scaling fit, the 6*params*tokens FLOPs
    rule, an A100 80G throughput derived from the published 65B-parameter
    training-run statistics (1.4T tokens over 1,022,362 GPU-hours), AWS
    hourly rates, and a clinical-text token density of 0.35e9 tokens per
    decimal GB. Pass a modified instance to recalibrate everything
    downstream.
    """

    chinchilla_slope: float = 0.9606
    chinchilla_intercept: float = 0.8981
    flops_factor: float = 6.0
    a100_flops_per_hour: float = 5.35701e17
    price_reserved_usd_per_hour: float = 3.0
    price_on_demand_usd_per_hour: float = 5.0
    default_tokens_per_gb: float = 0.35e9
    dev_multiplier: float = 5.14
    words_per_token: float = 0.75
    hours_per_year: float = 8760.0

    def __post_init__(self) -> None:
        for name, value in dataclasses.asdict(self).items():
            if not value > 0:
                raise ValueError(f"{name} must be strictly positive, got {value!r}")


DEFAULT_CONSTANTS = CalibrationConstants()

# Bytes per decimal gigabyte; disk sizes throughout are decimal GB.
BYTES_PER_GB = 1e9


def optimal_model_size(
    tokens: float, constants: CalibrationConstants = DEFAULT_CONSTANTS
) -> float:
    """Compute-optimal parameter count for a given token budget.

    Evaluates the log-linear scaling fit
    log10(params) = slope * log10(tokens) - intercept.
    """
    if tokens <= 0:
        raise ValueError(f"token count must be positive, got {tokens!r}")
    exponent = constants.chinchilla_slope * math.log10(tokens) - constants.chinchilla_intercept
    return 10.0 ** exponent


def optimal_token_count(
    params: float, constants: CalibrationConstants = DEFAULT_CONSTANTS
) -> float:
    """Token budget that makes training a `params`-sized model compute-optimal.

    Algebraic inversion of the same log-linear fit:
    log10(tokens) = (log10(params) + intercept) / slope.
    """
    if params <= 0:
        raise ValueError(f"parameter count must be positive, got {params!r}")
    exponent = (math.log10(params) + constants.chinchilla_intercept) / constants.chinchilla_slope
    return 10.0 ** exponent


def training_flops(
    params: float, tokens: float, constants: CalibrationConstants = DEFAULT_CONSTANTS
) -> float:
    """Total FLOPs for one pass of `tokens` through a `params`-sized model."""
    if params <= 0:
        raise ValueError(f"parameter count must be positive, got {params!r}")
    if tokens < 0:
        raise ValueError(f"token count must be non-negative, got {tokens!r}")
    return constants.flops_factor * params * tokens


def gpu_hours(flops: float, flops_per_hour: float) -> float:
    """GPU-hours needed to execute `flops` at a sustained per-GPU throughput."""
    if flops < 0:
        raise ValueError(f"flops must be non-negative, got {flops!r}")
    if flops_per_hour <= 0:
        raise ValueError(f"throughput must be positive, got {flops_per_hour!r}")
    return flops / flops_per_hour


def budget_usd(hours: float, usd_per_gpu_hour: float) -> float:
    """Rental cost of `hours` GPU-hours at a flat hourly rate."""
    if hours < 0:
        raise ValueError(f"hours must be non-negative, got {hours!r}")
    if usd_per_gpu_hour < 0:
        raise ValueError(f"rate must be non-negative, got {usd_per_gpu_hour!r}")
    return hours * usd_per_gpu_hour


def dataset_size_gb(tokens: float, tokens_per_gb: float) -> float:
    """Decimal gigabytes of text needed to hold `tokens` at a measured density."""
    if tokens < 0:
        raise ValueError(f"token count must be non-negative, got {tokens!r}")
    if tokens_per_gb <= 0:
        raise ValueError(f"tokens-per-GB ratio must be positive, got {tokens_per_gb!r}")
    return tokens / tokens_per_gb


def tokens_from_disk(gigabytes: float, tokens_per_gb: float) -> float:
    """Token count of a corpus of `gigabytes` at a measured density."""
    if gigabytes < 0:
        raise ValueError(f"disk size must be non-negative, got {gigabytes!r}")
    if tokens_per_gb <= 0:
        raise ValueError(f"tokens-per-GB ratio must be positive, got {tokens_per_gb!r}")
    return gigabytes * tokens_per_gb


def calibrate_throughput(
    params: float,
    tokens: float,
    measured_gpu_hours: float,
    constants: CalibrationConstants = DEFAULT_CONSTANTS,
) -> float:
    """Per-GPU FLOPs/hour implied by a measured training run.

    Given the parameter count and token budget of a completed run and the
    GPU-hours it consumed, returns the sustained throughput to plug into
    `gpu_hours`. This is how the default A100 constant was obtained; use it
    to recalibrate for your own hardware.
    """
    if measured_gpu_hours <= 0:
        raise ValueError(f"measured GPU-hours must be positive, got {measured_gpu_hours!r}")
    return training_flops(params, tokens, constants) / measured_gpu_hours
