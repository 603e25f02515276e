"""Optional JSON config: extra GPU catalog entries and a default-density
override. CLI flags always win over config values.

Schema:
    {
      "default_tokens_per_gb": 4.0e8,            // optional
      "gpus": [                                   // optional
        {
          "name": "H100 80G",
          "flops_per_hour": 1.2e18,
          "price_reserved_usd_per_hour": 6.5,
          "price_on_demand_usd_per_hour": 12.3
        }
      ]
    }
"""

from __future__ import annotations

import dataclasses
import json
import os
from dataclasses import dataclass

from .engine import GpuProfile, default_gpu
from .scaling import DEFAULT_CONSTANTS, CalibrationConstants

CONFIG_ENV_VAR = "LLMPLAN_CONFIG"


@dataclass(frozen=True)
class PlannerConfig:
    gpus: tuple[GpuProfile, ...] = ()
    default_tokens_per_gb: float | None = None


def load_config(path: str) -> PlannerConfig:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            raw = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ValueError(f"config {path} is not valid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise ValueError(f"config {path} must be a JSON object")

    unknown = set(raw) - {"gpus", "default_tokens_per_gb"}
    if unknown:
        raise ValueError(f"config {path} has unknown keys: {sorted(unknown)}")

    ratio = raw.get("default_tokens_per_gb")
    if ratio is not None and (not isinstance(ratio, (int, float)) or ratio <= 0):
        raise ValueError(f"default_tokens_per_gb must be a positive number, got {ratio!r}")

    gpus = []
    for i, entry in enumerate(raw.get("gpus", [])):
        if not isinstance(entry, dict):
            raise ValueError(f"config gpus[{i}] must be an object")
        try:
            gpus.append(
                GpuProfile(
                    name=entry["name"],
                    flops_per_hour=float(entry["flops_per_hour"]),
                    price_reserved_usd_per_hour=float(entry["price_reserved_usd_per_hour"]),
                    price_on_demand_usd_per_hour=float(entry["price_on_demand_usd_per_hour"]),
                )
            )
        except KeyError as exc:
            raise ValueError(f"config gpus[{i}] is missing field {exc.args[0]!r}") from None

    return PlannerConfig(gpus=tuple(gpus), default_tokens_per_gb=ratio)


def resolve_config(path: str | None = None) -> PlannerConfig:
    """Config from an explicit path, the environment variable, or empty."""
    path = path or os.environ.get(CONFIG_ENV_VAR)
    if not path:
        return PlannerConfig()
    return load_config(path)


def gpu_catalog(config: PlannerConfig | None = None) -> dict[str, GpuProfile]:
    """Built-in A100 plus any config entries, keyed by name."""
    catalog = {default_gpu().name: default_gpu()}
    if config is not None:
        for gpu in config.gpus:
            catalog[gpu.name] = gpu
    return catalog


def apply_config(config: PlannerConfig | None) -> CalibrationConstants:
    """Calibration constants with any config overrides applied."""
    if config is None or config.default_tokens_per_gb is None:
        return DEFAULT_CONSTANTS
    return dataclasses.replace(
        DEFAULT_CONSTANTS, default_tokens_per_gb=config.default_tokens_per_gb
    )
