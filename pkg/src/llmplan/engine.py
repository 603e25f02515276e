"""Scenario resolution: turn a planning question (model size, token source,
epochs, GPU fleet, pricing plan, overhead) into tokens, FLOPs, GPU-hours,
wall-clock time and dollars; regenerate the reference pretrain/continued
tables; run one-dimensional sweeps.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .scaling import (
    DEFAULT_CONSTANTS,
    CalibrationConstants,
    budget_usd,
    dataset_size_gb,
    gpu_hours,
    optimal_token_count,
    tokens_from_disk,
    training_flops,
)


class InvalidScenarioError(ValueError):
    """Scenario field combination with no defined estimate."""


class Mode(str, Enum):
    FROM_SCRATCH = "from_scratch"
    CONTINUED_PRETRAIN = "continued_pretrain"


class PlanKind(str, Enum):
    RESERVED = "reserved"
    ON_DEMAND = "on_demand"
    CUSTOM = "custom"


class TokenSourceKind(str, Enum):
    EXPLICIT = "explicit"
    FROM_DISK = "from_disk"
    CHINCHILLA_OPTIMAL = "chinchilla_optimal"


@dataclass(frozen=True)
class GpuProfile:
    name: str
    flops_per_hour: float
    price_reserved_usd_per_hour: float
    price_on_demand_usd_per_hour: float

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("GPU profile needs a non-empty name")
        if self.flops_per_hour <= 0:
            raise ValueError(f"GPU throughput must be positive, got {self.flops_per_hour!r}")
        if self.price_reserved_usd_per_hour < 0 or self.price_on_demand_usd_per_hour < 0:
            raise ValueError("GPU prices must be non-negative")


def default_gpu(constants: CalibrationConstants = DEFAULT_CONSTANTS) -> GpuProfile:
    """The built-in A100 80G profile, derived from the calibration constants."""
    return GpuProfile(
        name="A100 80G",
        flops_per_hour=constants.a100_flops_per_hour,
        price_reserved_usd_per_hour=constants.price_reserved_usd_per_hour,
        price_on_demand_usd_per_hour=constants.price_on_demand_usd_per_hour,
    )


A100_80G = default_gpu()


@dataclass(frozen=True)
class PricingPlan:
    kind: PlanKind = PlanKind.RESERVED
    custom_rate: float | None = None

    def __post_init__(self) -> None:
        if self.kind is PlanKind.CUSTOM:
            if self.custom_rate is None or self.custom_rate < 0:
                raise ValueError(f"custom plan needs a rate >= 0, got {self.custom_rate!r}")
        elif self.custom_rate is not None:
            raise ValueError(f"{self.kind.value} plan does not take a rate")

    @classmethod
    def reserved(cls) -> "PricingPlan":
        return cls(PlanKind.RESERVED)

    @classmethod
    def on_demand(cls) -> "PricingPlan":
        return cls(PlanKind.ON_DEMAND)

    @classmethod
    def custom(cls, rate: float) -> "PricingPlan":
        return cls(PlanKind.CUSTOM, custom_rate=rate)

    def rate_for(self, gpu: GpuProfile) -> float:
        """Hourly USD rate this plan pays for one GPU of the given profile."""
        if self.kind is PlanKind.RESERVED:
            return gpu.price_reserved_usd_per_hour
        if self.kind is PlanKind.ON_DEMAND:
            return gpu.price_on_demand_usd_per_hour
        assert self.custom_rate is not None
        return self.custom_rate


@dataclass(frozen=True)
class TokenSource:
    """Where a scenario's token budget comes from.

    explicit   -- a known token count
    from_disk  -- a corpus size in decimal GB times a tokens-per-GB density
                  (density None means the calibration default)
    chinchilla_optimal -- the compute-optimal budget for the scenario's
                  model size; only meaningful when training from scratch
    """

    kind: TokenSourceKind
    tokens: float | None = None
    gb: float | None = None
    ratio: float | None = None

    def __post_init__(self) -> None:
        if self.kind is TokenSourceKind.EXPLICIT:
            if self.tokens is None or self.tokens <= 0:
                raise ValueError(f"explicit token count must be positive, got {self.tokens!r}")
        elif self.kind is TokenSourceKind.FROM_DISK:
            if self.gb is None or self.gb <= 0:
                raise ValueError(f"corpus size must be positive, got {self.gb!r}")
            if self.ratio is not None and self.ratio <= 0:
                raise ValueError(f"tokens-per-GB ratio must be positive, got {self.ratio!r}")

    @classmethod
    def explicit(cls, tokens: float) -> "TokenSource":
        return cls(TokenSourceKind.EXPLICIT, tokens=tokens)

    @classmethod
    def from_disk(cls, gb: float, ratio: float | None = None) -> "TokenSource":
        return cls(TokenSourceKind.FROM_DISK, gb=gb, ratio=ratio)

    @classmethod
    def chinchilla(cls) -> "TokenSource":
        return cls(TokenSourceKind.CHINCHILLA_OPTIMAL)


@dataclass(frozen=True)
class Scenario:
    mode: Mode
    model_params: float
    token_source: TokenSource
    epochs: float = 1.0
    gpu: GpuProfile = A100_80G
    gpu_count: int = 1
    plan: PricingPlan = PricingPlan()
    overhead_multiplier: float = 1.0

    def __post_init__(self) -> None:
        if self.model_params <= 0:
            raise ValueError(f"model size must be positive, got {self.model_params!r}")
        if self.epochs < 1:
            raise ValueError(f"epochs must be >= 1, got {self.epochs!r}")
        if not isinstance(self.gpu_count, int) or self.gpu_count < 1:
            raise ValueError(f"gpu_count must be an integer >= 1, got {self.gpu_count!r}")
        if self.overhead_multiplier < 1:
            raise ValueError(
                f"overhead multiplier must be >= 1, got {self.overhead_multiplier!r}"
            )
        if (
            self.token_source.kind is TokenSourceKind.CHINCHILLA_OPTIMAL
            and self.mode is not Mode.FROM_SCRATCH
        ):
            raise InvalidScenarioError(
                "a chinchilla-optimal token budget is only defined when training "
                "from scratch; continued pretraining needs an explicit or "
                "from-disk token source"
            )


@dataclass(frozen=True)
class CostEstimate:
    """Resolved answer to a Scenario, all fields full precision."""

    tokens: float
    dataset_gb: float
    flops: float
    gpu_hours: float
    wall_clock_hours: float
    usd: float
    project_usd: float
    project_gpu_hours: float


# Overhead presets: "llama_dev" is the published development-iteration
# multiplier (total project compute / final-run compute), a lower bound.
OVERHEAD_PRESETS = {"llama_dev": DEFAULT_CONSTANTS.dev_multiplier}


def resolve_tokens(
    scenario: Scenario, constants: CalibrationConstants = DEFAULT_CONSTANTS
) -> float:
    """Token budget implied by the scenario's token source."""
    source = scenario.token_source
    if source.kind is TokenSourceKind.EXPLICIT:
        assert source.tokens is not None
        return source.tokens
    if source.kind is TokenSourceKind.FROM_DISK:
        assert source.gb is not None
        ratio = source.ratio if source.ratio is not None else constants.default_tokens_per_gb
        return tokens_from_disk(source.gb, ratio)
    if scenario.mode is not Mode.FROM_SCRATCH:
        raise InvalidScenarioError(
            "chinchilla-optimal token budget requires from-scratch mode"
        )
    return optimal_token_count(scenario.model_params, constants)


def scenario_ratio(
    scenario: Scenario, constants: CalibrationConstants = DEFAULT_CONSTANTS
) -> float:
    """Tokens-per-GB density used to express this scenario's data on disk."""
    source = scenario.token_source
    if source.kind is TokenSourceKind.FROM_DISK and source.ratio is not None:
        return source.ratio
    return constants.default_tokens_per_gb


def wall_clock_hours(total_gpu_hours: float, gpu_count: int) -> float:
    """Elapsed hours when the GPU-hours spread over a fleet.

    Assumes ideal linear scaling with no communication overhead; the
    published fleet data point (2048 GPUs, ~21 days for the 65B run) is
    consistent with this idealization.
    """
    if gpu_count < 1:
        raise ValueError(f"gpu_count must be >= 1, got {gpu_count!r}")
    if total_gpu_hours < 0:
        raise ValueError(f"gpu hours must be non-negative, got {total_gpu_hours!r}")
    return total_gpu_hours / gpu_count


def project_cost(base_usd: float, multiplier: float) -> float:
    """Scale a single-run cost to a whole-project cost.

    The multiplier covers development iterations, failed runs and ablations;
    the published reference value (5.14) is a lower bound, so < 1 is
    rejected.
    """
    if multiplier < 1:
        raise ValueError(f"project multiplier must be >= 1, got {multiplier!r}")
    if base_usd < 0:
        raise ValueError(f"base cost must be non-negative, got {base_usd!r}")
    return base_usd * multiplier


def estimate(
    scenario: Scenario, constants: CalibrationConstants = DEFAULT_CONSTANTS
) -> CostEstimate:
    """Resolve a scenario into a full cost estimate.

    tokens -> FLOPs (6 * params * tokens * epochs) -> GPU-hours
    (FLOPs / throughput) -> wall clock (hours / fleet size) and dollars
    (hours * plan rate); dataset_gb re-expresses the tokens at the
    scenario's density; project_* applies the overhead multiplier.
    """
    tokens = resolve_tokens(scenario, constants)
    ratio = scenario_ratio(scenario, constants)
    flops = training_flops(scenario.model_params, tokens, constants) * scenario.epochs
    hours = gpu_hours(flops, scenario.gpu.flops_per_hour)
    usd = budget_usd(hours, scenario.plan.rate_for(scenario.gpu))
    return CostEstimate(
        tokens=tokens,
        dataset_gb=dataset_size_gb(tokens, ratio),
        flops=flops,
        gpu_hours=hours,
        wall_clock_hours=wall_clock_hours(hours, scenario.gpu_count),
        usd=usd,
        project_usd=project_cost(usd, scenario.overhead_multiplier),
        project_gpu_hours=hours * scenario.overhead_multiplier,
    )


# Reference-table geometry. Example-model names are display metadata only.
PRETRAIN_MODEL_SIZES = (1.5e9, 7e9, 13e9, 33e9, 65e9, 175e9)
PRETRAIN_EXAMPLE_MODELS = {
    1.5e9: "GPT-2",
    7e9: "LLaMA-7B",
    13e9: "LLaMA-13B",
    33e9: "LLaMA-33B",
    65e9: "LLaMA-65B",
    175e9: "GPT-3/ChatGPT",
}
CONTINUED_MODEL_SIZES = (1.5e9, 7e9, 13e9, 33e9, 65e9)
CONTINUED_DISK_SIZES_GB = (20.0, 100.0, 500.0, 1000.0, 5000.0, 10000.0)


@dataclass(frozen=True)
class PretrainRow:
    model_params: float
    example_model: str
    estimate: CostEstimate


def pretrain_table(
    constants: CalibrationConstants = DEFAULT_CONSTANTS,
) -> list[PretrainRow]:
    """From-scratch reference table: compute-optimal budget, disk size, cost
    and time for one epoch on a single reserved default GPU, at each
    canonical model size."""
    gpu = default_gpu(constants)
    rows = []
    for params in PRETRAIN_MODEL_SIZES:
        scenario = Scenario(
            mode=Mode.FROM_SCRATCH,
            model_params=params,
            token_source=TokenSource.chinchilla(),
            gpu=gpu,
        )
        name = PRETRAIN_EXAMPLE_MODELS.get(params, "")
        rows.append(PretrainRow(params, name, estimate(scenario, constants)))
    return rows


@dataclass(frozen=True)
class ContinuedGrid:
    """Continued-pretraining cost grid: usd[i][j] is the one-epoch cost of
    disk_sizes_gb[i] of text through a model_sizes[j]-parameter model."""

    model_sizes: tuple[float, ...]
    disk_sizes_gb: tuple[float, ...]
    usd: tuple[tuple[float, ...], ...]


def continued_table(
    model_sizes: Sequence[float] = CONTINUED_MODEL_SIZES,
    disk_sizes_gb: Sequence[float] = CONTINUED_DISK_SIZES_GB,
    constants: CalibrationConstants = DEFAULT_CONSTANTS,
) -> ContinuedGrid:
    """Cost grid for continued pretraining over model sizes x corpus sizes."""
    if not model_sizes or not disk_sizes_gb:
        raise ValueError("model and disk-size lists must be non-empty")
    gpu = default_gpu(constants)
    grid = []
    for gb in disk_sizes_gb:
        row = []
        for params in model_sizes:
            scenario = Scenario(
                mode=Mode.CONTINUED_PRETRAIN,
                model_params=params,
                token_source=TokenSource.from_disk(gb),
                gpu=gpu,
            )
            row.append(estimate(scenario, constants).usd)
        grid.append(tuple(row))
    return ContinuedGrid(tuple(model_sizes), tuple(disk_sizes_gb), tuple(grid))


SWEEP_FIELDS = ("model", "disk_gb", "tokens", "epochs", "gpu_count", "rate")


@dataclass(frozen=True)
class SweepPoint:
    field: str
    value: float
    estimate: CostEstimate | None = None
    error: str | None = None


def apply_sweep_value(base: Scenario, field: str, value: float) -> Scenario:
    """Base scenario with one field replaced by a sweep value."""
    if field == "model":
        return dataclasses.replace(base, model_params=value)
    if field == "disk_gb":
        # keep an explicitly-set density, fall back to the default otherwise
        ratio = base.token_source.ratio
        return dataclasses.replace(base, token_source=TokenSource.from_disk(value, ratio))
    if field == "tokens":
        return dataclasses.replace(base, token_source=TokenSource.explicit(value))
    if field == "epochs":
        return dataclasses.replace(base, epochs=value)
    if field == "gpu_count":
        count = int(value)
        if count != value:
            raise ValueError(f"gpu_count must be an integer, got {value!r}")
        return dataclasses.replace(base, gpu_count=count)
    if field == "rate":
        return dataclasses.replace(base, plan=PricingPlan.custom(value))
    raise ValueError(f"unknown sweep field {field!r}; expected one of {SWEEP_FIELDS}")


def sweep(
    base: Scenario,
    field: str,
    values: Iterable[float],
    constants: CalibrationConstants = DEFAULT_CONSTANTS,
) -> list[SweepPoint]:
    """One estimate per value with `field` replaced, base otherwise unchanged.

    Invalid values become per-point error entries; the sweep continues.
    Output order equals input order.
    """
    if field not in SWEEP_FIELDS:
        raise ValueError(f"unknown sweep field {field!r}; expected one of {SWEEP_FIELDS}")
    points = []
    for value in values:
        try:
            resolved = estimate(apply_sweep_value(base, field, value), constants)
            points.append(SweepPoint(field, value, estimate=resolved))
        except ValueError as exc:  # includes InvalidScenarioError
            points.append(SweepPoint(field, value, error=str(exc)))
    return points
