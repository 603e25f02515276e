"""Display-rounding conventions for costs, durations, counts and disk sizes.

All formatting is half-up decimal rounding with a '.' separator, independent
of locale. Python's round() is half-even and does not reproduce the
reference tables, hence the Decimal quantization here. These strings are the
only lossy surface; CSV/JSON outputs carry full-precision floats.
"""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal

HOURS_PER_YEAR = 8760.0  # 365-day years

_COUNT_SCALES = ((1e12, "T"), (1e9, "B"), (1e6, "M"), (1e3, "K"))


def _one_decimal(value: float) -> str:
    return str(Decimal(repr(value)).quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))


def format_money(usd: float) -> str:
    """Render a dollar amount: "$352.8", "$1.5K", "$25.6M", "$7.6B"."""
    if usd < 0:
        raise ValueError(f"cannot format negative dollars: {usd!r}")
    if usd < 1e3:
        return f"${_one_decimal(usd)}"
    if usd < 1e6:
        return f"${_one_decimal(usd / 1e3)}K"
    if usd < 1e9:
        return f"${_one_decimal(usd / 1e6)}M"
    return f"${_one_decimal(usd / 1e9)}B"


def format_duration(hours: float) -> str:
    """Render hours as "21.5 days" below one year, "129.1 years" above."""
    if hours < 0:
        raise ValueError(f"cannot format negative duration: {hours!r}")
    days = hours / 24.0
    if days < 365.0:
        return f"{_one_decimal(days)} days"
    return f"{_one_decimal(hours / HOURS_PER_YEAR)} years"


def format_count(value: float, unit: str = "tokens") -> str:
    """Render a token/parameter count ("30.7B", "1.6T") or a disk size.

    unit "tokens" and "params" scale by K/M/B/T at powers of 1e3; unit
    "bytes_gb" takes a value in decimal GB and renders "87.7GB" below
    1000, "4.4TB" above.
    """
    if value < 0:
        raise ValueError(f"cannot format negative count: {value!r}")
    if unit == "bytes_gb":
        return format_gigabytes(value)
    if unit not in ("tokens", "params"):
        raise ValueError(f"unknown count unit: {unit!r}")
    for scale, suffix in _COUNT_SCALES:
        if value >= scale:
            return f"{_one_decimal(value / scale)}{suffix}"
    return _one_decimal(value)


def format_gigabytes(gigabytes: float) -> str:
    """Render a decimal-GB size: "87.7GB" below 1000, "4.4TB" above."""
    if gigabytes < 0:
        raise ValueError(f"cannot format negative size: {gigabytes!r}")
    if gigabytes < 1000.0:
        return f"{_one_decimal(gigabytes)}GB"
    return f"{_one_decimal(gigabytes / 1000.0)}TB"


def format_tokens_per_gb(tokens_per_gb: float) -> str:
    """Render a token density as billions per GB with two decimals: "0.35"."""
    if tokens_per_gb < 0:
        raise ValueError(f"cannot format negative ratio: {tokens_per_gb!r}")
    quantized = Decimal(repr(tokens_per_gb / 1e9)).quantize(
        Decimal("0.01"), rounding=ROUND_HALF_UP
    )
    return str(quantized)


def estimate_payload(estimate) -> dict:
    """Full-precision CostEstimate fields plus their display strings.

    Shared by the CLI's JSON output and the HTTP estimate responses so the
    two surfaces can never disagree.
    """
    return {
        "tokens": estimate.tokens,
        "dataset_gb": estimate.dataset_gb,
        "flops": estimate.flops,
        "gpu_hours": estimate.gpu_hours,
        "wall_clock_hours": estimate.wall_clock_hours,
        "usd": estimate.usd,
        "project_usd": estimate.project_usd,
        "project_gpu_hours": estimate.project_gpu_hours,
        "usd_display": format_money(estimate.usd),
        "time_display": format_duration(estimate.wall_clock_hours),
        "tokens_display": format_count(estimate.tokens, "tokens"),
        "dataset_display": format_gigabytes(estimate.dataset_gb),
        "project_usd_display": format_money(estimate.project_usd),
    }
