"""Command-line front end.

Subcommands: scratch (from-scratch estimate), continued (continued
pretraining estimate), tables (reference tables 3/4), profile (corpus
statistics), sweep (one-dimensional grids), serve (HTTP service).

Exit codes: 0 success, 1 usage error, 2 runtime/IO error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .config import gpu_catalog, resolve_config, apply_config
from .display import (
    estimate_payload,
    format_count,
    format_duration,
    format_gigabytes,
    format_money,
    format_tokens_per_gb,
)
from .engine import (
    CONTINUED_DISK_SIZES_GB,
    CONTINUED_MODEL_SIZES,
    OVERHEAD_PRESETS,
    SWEEP_FIELDS,
    Mode,
    PricingPlan,
    Scenario,
    TokenSource,
    continued_table,
    estimate,
    pretrain_table,
    sweep,
)
from .profiler import CountingMethod, profile_corpus, tokens_per_gb


class UsageError(ValueError):
    """Bad command-line input (maps to exit code 1)."""


_SUFFIX_SCALE = {"k": 1e3, "m": 1e6, "b": 1e9, "t": 1e12}


def parse_quantity(text: str) -> float:
    """Parse a number with optional scientific notation or K/M/B/T suffix."""
    raw = text.strip()
    scale = 1.0
    if raw and raw[-1].lower() in _SUFFIX_SCALE:
        scale = _SUFFIX_SCALE[raw[-1].lower()]
        raw = raw[:-1]
    try:
        return float(raw) * scale
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def parse_plan(text: str) -> PricingPlan:
    """Parse --plan: reserved | on-demand | custom:RATE."""
    name = text.strip().lower().replace("-", "_")
    if name == "reserved":
        return PricingPlan.reserved()
    if name == "on_demand":
        return PricingPlan.on_demand()
    if name.startswith("custom:"):
        try:
            return PricingPlan.custom(float(text.split(":", 1)[1]))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad custom rate in {text!r}: {exc}") from None
    raise argparse.ArgumentTypeError(
        f"unknown plan {text!r}; expected reserved, on-demand, or custom:RATE"
    )


def parse_overhead(text: str) -> float:
    """Parse --overhead: a multiplier >= 1 or a preset name like llama_dev."""
    if text in OVERHEAD_PRESETS:
        return OVERHEAD_PRESETS[text]
    try:
        return float(text)
    except ValueError:
        names = ", ".join(sorted(OVERHEAD_PRESETS))
        raise argparse.ArgumentTypeError(
            f"overhead must be a number or a preset ({names}), got {text!r}"
        ) from None


def parse_values_list(text: str) -> list[float]:
    parts = [part for part in text.split(",") if part.strip()]
    return [parse_quantity(part) for part in parts]


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract here is exit code 1
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("table", "csv", "json"),
        default="table",
        help="output format (default: table)",
    )
    parser.add_argument(
        "--config",
        default=None,
        help="path to a JSON config file (default: $LLMPLAN_CONFIG if set)",
    )


def _add_scenario_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--params", type=parse_quantity, required=True,
                        help="model size in parameters (accepts 65e9 or 65B)")
    parser.add_argument("--tokens", type=parse_quantity, default=None,
                        help="explicit training token count")
    parser.add_argument("--chinchilla", action="store_true",
                        help="use the compute-optimal token budget for --params")
    parser.add_argument("--corpus-gb", type=parse_quantity, default=None,
                        help="corpus size on disk in decimal GB")
    parser.add_argument("--ratio", type=parse_quantity, default=None,
                        help="tokens per GB for --corpus-gb (default 0.35B)")
    parser.add_argument("--epochs", type=float, default=1.0,
                        help="training passes over the data (default 1)")
    parser.add_argument("--gpus", type=int, default=1,
                        help="GPU fleet size for wall-clock time (default 1)")
    parser.add_argument("--gpu", default="A100 80G",
                        help="GPU profile name from the catalog (default: A100 80G)")
    parser.add_argument("--plan", type=parse_plan, default=PricingPlan.reserved(),
                        help="pricing plan: reserved, on-demand, or custom:RATE")
    parser.add_argument("--overhead", type=parse_overhead, default=1.0,
                        help="project overhead multiplier or preset (llama_dev = 5.14)")


def _scenario_from_args(args: argparse.Namespace, mode: Mode, catalog) -> Scenario:
    chosen = [
        name
        for name, given in (
            ("--tokens", args.tokens is not None),
            ("--corpus-gb", args.corpus_gb is not None),
            ("--chinchilla", args.chinchilla),
        )
        if given
    ]
    if len(chosen) > 1:
        raise UsageError(f"token source flags are mutually exclusive, got {chosen}")
    if args.ratio is not None and args.corpus_gb is None:
        raise UsageError("--ratio only applies together with --corpus-gb")

    if args.tokens is not None:
        source = TokenSource.explicit(args.tokens)
    elif args.corpus_gb is not None:
        source = TokenSource.from_disk(args.corpus_gb, args.ratio)
    elif args.chinchilla or mode is Mode.FROM_SCRATCH:
        source = TokenSource.chinchilla()
    else:
        raise UsageError("continued pretraining needs --tokens or --corpus-gb")

    if args.gpu not in catalog:
        raise UsageError(
            f"unknown GPU {args.gpu!r}; catalog has: {', '.join(sorted(catalog))}"
        )
    return Scenario(
        mode=mode,
        model_params=args.params,
        token_source=source,
        epochs=args.epochs,
        gpu=catalog[args.gpu],
        gpu_count=args.gpus,
        plan=args.plan,
        overhead_multiplier=args.overhead,
    )


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(v) if isinstance(v, float) else v for v in row])
    return buffer.getvalue()


def _render_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


_ESTIMATE_CSV_FIELDS = (
    "mode", "model_params", "tokens", "dataset_gb", "flops",
    "gpu_hours", "wall_clock_hours", "usd", "project_usd", "project_gpu_hours",
)


def _print_estimate(scenario: Scenario, args: argparse.Namespace, constants) -> None:
    result = estimate(scenario, constants)
    if args.format == "json":
        payload = estimate_payload(result)
        payload["mode"] = scenario.mode.value
        payload["model_params"] = scenario.model_params
        print(json.dumps(payload, indent=2))
        return
    if args.format == "csv":
        row = [scenario.mode.value, scenario.model_params, result.tokens,
               result.dataset_gb, result.flops, result.gpu_hours,
               result.wall_clock_hours, result.usd, result.project_usd,
               result.project_gpu_hours]
        sys.stdout.write(_csv_text(_ESTIMATE_CSV_FIELDS, [row]))
        return
    rows = [
        ("Model size", format_count(scenario.model_params, "params")),
        ("Training tokens", format_count(result.tokens)),
        ("Dataset size", format_gigabytes(result.dataset_gb)),
        ("Training FLOPs", f"{result.flops:.4e}"),
        ("GPU-hours", f"{result.gpu_hours:,.1f}"),
        (f"Wall clock ({scenario.gpu_count} GPU)", format_duration(result.wall_clock_hours)),
        ("Cost", format_money(result.usd)),
        ("Project cost", format_money(result.project_usd)),
        ("Project GPU-hours", f"{result.project_gpu_hours:,.1f}"),
    ]
    sys.stdout.write(_render_table(("Quantity", "Value"), rows))


def _cmd_scratch(args: argparse.Namespace) -> int:
    config = resolve_config(args.config)
    scenario = _scenario_from_args(args, Mode.FROM_SCRATCH, gpu_catalog(config))
    _print_estimate(scenario, args, apply_config(config))
    return 0


def _cmd_continued(args: argparse.Namespace) -> int:
    config = resolve_config(args.config)
    scenario = _scenario_from_args(args, Mode.CONTINUED_PRETRAIN, gpu_catalog(config))
    _print_estimate(scenario, args, apply_config(config))
    return 0


def _cmd_tables(args: argparse.Namespace) -> int:
    constants = apply_config(resolve_config(args.config))
    if args.which == "3":
        rows = pretrain_table(constants)
        if args.format == "json":
            payload = {"rows": []}
            for row in rows:
                entry = estimate_payload(row.estimate)
                entry["model_params"] = row.model_params
                entry["params_display"] = format_count(row.model_params, "params")
                entry["example_model"] = row.example_model
                payload["rows"].append(entry)
            print(json.dumps(payload, indent=2))
        elif args.format == "csv":
            header = ("model_params", "example_model", "tokens", "dataset_gb",
                      "usd", "gpu_hours")
            data = [(r.model_params, r.example_model, r.estimate.tokens,
                     r.estimate.dataset_gb, r.estimate.usd, r.estimate.gpu_hours)
                    for r in rows]
            sys.stdout.write(_csv_text(header, data))
        else:
            header = ("Model size", "Example model", "Optimal training tokens",
                      "Database size", "Cost (USD)", "Training time")
            cells = [
                (format_count(r.model_params, "params"), r.example_model,
                 format_count(r.estimate.tokens), format_gigabytes(r.estimate.dataset_gb),
                 format_money(r.estimate.usd), format_duration(r.estimate.gpu_hours))
                for r in rows
            ]
            sys.stdout.write(_render_table(header, cells))
        return 0

    grid = continued_table(CONTINUED_MODEL_SIZES, CONTINUED_DISK_SIZES_GB, constants)
    if args.format == "json":
        payload = {
            "model_sizes": list(grid.model_sizes),
            "model_displays": [format_count(m, "params") for m in grid.model_sizes],
            "disk_sizes_gb": list(grid.disk_sizes_gb),
            "disk_displays": [format_gigabytes(g) for g in grid.disk_sizes_gb],
            "usd": [list(row) for row in grid.usd],
            "usd_display": [[format_money(v) for v in row] for row in grid.usd],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        header = ["disk_gb"] + [repr(m) for m in grid.model_sizes]
        data = [[gb] + list(row) for gb, row in zip(grid.disk_sizes_gb, grid.usd)]
        sys.stdout.write(_csv_text(header, data))
    else:
        header = ["Database size"] + [format_count(m, "params") for m in grid.model_sizes]
        cells = [
            [format_gigabytes(gb)] + [format_money(v) for v in row]
            for gb, row in zip(grid.disk_sizes_gb, grid.usd)
        ]
        sys.stdout.write(_render_table(header, cells))
    return 0


def _cmd_profile(args: argparse.Namespace) -> int:
    config = resolve_config(args.config)
    constants = apply_config(config)
    if args.method == "bpe":
        if not args.vocab or not args.merges:
            raise UsageError("--method bpe needs --vocab and --merges files")
        from .bpe import load_tokenizer_files

        method = CountingMethod.exact_bpe(load_tokenizer_files(args.vocab, args.merges))
    elif args.method == "ratio":
        ratio = args.ratio if args.ratio is not None else constants.default_tokens_per_gb
        method = CountingMethod.byte_ratio(ratio)
    else:
        method = CountingMethod.word_heuristic()

    stats = profile_corpus(
        args.path,
        method,
        follow_symlinks=args.follow_symlinks,
        workers=args.workers,
        constants=constants,
    )
    ratio_value = tokens_per_gb(stats) if stats.total_bytes > 0 else None

    if args.format == "json":
        payload = {
            "method": stats.method.value,
            "file_count": stats.file_count,
            "total_bytes": stats.total_bytes,
            "token_count": stats.token_count,
            "word_count": stats.word_count,
            "duplicate_doc_count": stats.duplicate_doc_count,
            "tokens_per_gb": ratio_value,
            "tokens_per_gb_display": (
                format_tokens_per_gb(ratio_value) if ratio_value is not None else None
            ),
            "skipped_files": [list(item) for item in stats.skipped_files],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        header = ("method", "file_count", "total_bytes", "token_count",
                  "word_count", "duplicate_doc_count", "tokens_per_gb", "skipped_count")
        row = [stats.method.value, stats.file_count, stats.total_bytes,
               stats.token_count, stats.word_count, stats.duplicate_doc_count,
               ratio_value if ratio_value is not None else "", len(stats.skipped_files)]
        sys.stdout.write(_csv_text(header, [row]))
    else:
        rows = [
            ("Method", stats.method.value),
            ("Files", str(stats.file_count)),
            ("Total bytes", f"{stats.total_bytes:,}"),
            ("Words", f"{stats.word_count:,}"),
            ("Tokens", f"{stats.token_count:,.0f}"),
            ("Duplicate documents", str(stats.duplicate_doc_count)),
        ]
        if ratio_value is not None:
            rows.append(("Tokens/GB (billions)", format_tokens_per_gb(ratio_value)))
        if stats.skipped_files:
            rows.append(("Skipped files", str(len(stats.skipped_files))))
        sys.stdout.write(_render_table(("Quantity", "Value"), rows))
        for path, reason in stats.skipped_files:
            print(f"skipped: {path}: {reason}", file=sys.stderr)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    config = resolve_config(args.config)
    constants = apply_config(config)
    mode = Mode.FROM_SCRATCH if args.mode == "scratch" else Mode.CONTINUED_PRETRAIN

    # when the swept field is the token source itself, the base scenario
    # gets a placeholder source that every point replaces anyway
    no_source = args.tokens is None and args.corpus_gb is None and not args.chinchilla
    if no_source and args.vary in ("disk_gb", "tokens") and mode is not Mode.FROM_SCRATCH:
        args.chinchilla = False
        args.tokens = 1.0
    scenario = _scenario_from_args(args, mode, gpu_catalog(config))
    points = sweep(scenario, args.vary, args.values, constants)

    if args.format == "json":
        payload = {
            "field": args.vary,
            "points": [
                {
                    "value": p.value,
                    "estimate": estimate_payload(p.estimate) if p.estimate else None,
                    "error": p.error,
                }
                for p in points
            ],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        header = (args.vary,) + _ESTIMATE_CSV_FIELDS[2:] + ("error",)
        data = []
        for p in points:
            if p.estimate:
                e = p.estimate
                data.append([p.value, e.tokens, e.dataset_gb, e.flops, e.gpu_hours,
                             e.wall_clock_hours, e.usd, e.project_usd,
                             e.project_gpu_hours, ""])
            else:
                data.append([p.value] + [""] * 8 + [p.error])
        sys.stdout.write(_csv_text(header, data))
    else:
        header = (args.vary, "Tokens", "Dataset", "Cost", "Wall clock")
        cells = []
        for p in points:
            if p.estimate:
                e = p.estimate
                cells.append((f"{p.value:g}", format_count(e.tokens),
                              format_gigabytes(e.dataset_gb), format_money(e.usd),
                              format_duration(e.wall_clock_hours)))
            else:
                cells.append((f"{p.value:g}", f"error: {p.error}", "", "", ""))
        sys.stdout.write(_render_table(header, cells))
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .api import create_app

    config = resolve_config(args.config)
    app = create_app(config=config, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="llmplan", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("scratch", help="cost of pretraining a model from scratch")
    _add_scenario_flags(p)
    _add_common_flags(p)
    p.set_defaults(handler=_cmd_scratch)

    p = sub.add_parser("continued", help="cost of continued pretraining on a corpus")
    _add_scenario_flags(p)
    _add_common_flags(p)
    p.set_defaults(handler=_cmd_continued)

    p = sub.add_parser("tables", help="reproduce the reference planning tables")
    p.add_argument("--which", choices=("3", "4"), required=True,
                   help="3: from-scratch table; 4: continued-pretraining grid")
    _add_common_flags(p)
    p.set_defaults(handler=_cmd_tables)

    p = sub.add_parser("profile", help="profile a corpus directory")
    p.add_argument("path", help="corpus root directory")
    p.add_argument("--method", choices=("bpe", "words", "ratio"), default="words",
                   help="token counting method (default: words)")
    p.add_argument("--vocab", default=None, help="vocab JSON for --method bpe")
    p.add_argument("--merges", default=None, help="merges file for --method bpe")
    p.add_argument("--ratio", type=parse_quantity, default=None,
                   help="tokens per GB for --method ratio (default 0.35B)")
    p.add_argument("--follow-symlinks", action="store_true")
    p.add_argument("--workers", type=int, default=1,
                   help="parallel file readers (default 1)")
    _add_common_flags(p)
    p.set_defaults(handler=_cmd_profile)

    p = sub.add_parser("sweep", help="estimate across a list of values for one field")
    p.add_argument("--vary", choices=SWEEP_FIELDS, required=True)
    p.add_argument("--values", type=parse_values_list, required=True,
                   help="comma-separated values (suffixes allowed, e.g. 20,100,1T)")
    p.add_argument("--mode", choices=("scratch", "continued"), default="scratch")
    _add_scenario_flags(p)
    _add_common_flags(p)
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("serve", help="run the HTTP planning service")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui-dir", default=None,
                   help="directory of built UI assets to serve at /")
    p.add_argument("--config", default=None)
    p.set_defaults(handler=_cmd_serve)

    return parser


def run_command(argv: Sequence[str]) -> int:
    """Parse and execute one command line; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"llmplan: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"llmplan: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"llmplan: error: {exc}", file=sys.stderr)
        return 2


def main() -> int:
    return run_command(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
