"""Capacity and budget planning for LLM pretraining on clinical-scale text.

Converts between model size, token budget, disk size, FLOPs, GPU-hours,
wall-clock time and dollars; measures tokens-per-GB density on real corpora
with an exact byte-level BPE tokenizer; reproduces the reference planning
tables; and exposes everything over a CLI and an HTTP/JSON service.
"""

from .bpe import (
    StreamingTokenCounter,
    TokenizerLoadError,
    TokenizerModel,
    byte_vocabulary,
    count_tokens_stream,
    decode_bytes,
    encode,
    load_tokenizer,
    load_tokenizer_files,
    pretokenize,
)
from .display import (
    estimate_payload,
    format_count,
    format_duration,
    format_gigabytes,
    format_money,
    format_tokens_per_gb,
)
from .engine import (
    A100_80G,
    CONTINUED_DISK_SIZES_GB,
    CONTINUED_MODEL_SIZES,
    OVERHEAD_PRESETS,
    PRETRAIN_MODEL_SIZES,
    ContinuedGrid,
    CostEstimate,
    GpuProfile,
    InvalidScenarioError,
    Mode,
    PricingPlan,
    PretrainRow,
    Scenario,
    SweepPoint,
    TokenSource,
    continued_table,
    default_gpu,
    estimate,
    pretrain_table,
    project_cost,
    resolve_tokens,
    sweep,
    wall_clock_hours,
)
from .profiler import (
    CorpusStats,
    CountingMethod,
    duplicate_stats,
    profile_corpus,
    tokens_per_gb,
    word_heuristic_tokens,
)
from .scaling import (
    BYTES_PER_GB,
    DEFAULT_CONSTANTS,
    CalibrationConstants,
    budget_usd,
    calibrate_throughput,
    dataset_size_gb,
    gpu_hours,
    optimal_model_size,
    optimal_token_count,
    tokens_from_disk,
    training_flops,
)

__version__ = "0.1.0"
