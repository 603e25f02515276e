"""Stateless HTTP/JSON facade over the cost engine for the planner UI and
scripts. Versioned under /api/v1; strict request parsing (unknown fields are
rejected so client typos cannot silently fall back to defaults); every error
response is JSON with an `errors` array.
"""

from __future__ import annotations

import dataclasses
import os
from typing import Literal

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ConfigDict, Field
from starlette.exceptions import HTTPException as StarletteHTTPException

from .config import PlannerConfig, apply_config, gpu_catalog
from .display import estimate_payload, format_count, format_gigabytes, format_money
from .engine import (
    CONTINUED_DISK_SIZES_GB,
    CONTINUED_MODEL_SIZES,
    InvalidScenarioError,
    Mode,
    PricingPlan,
    Scenario,
    TokenSource,
    continued_table,
    estimate,
    pretrain_table,
    sweep,
)

UI_DIR_ENV_VAR = "LLMPLAN_UI_DIR"


class TokenSourceRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    type: Literal["explicit", "from_disk", "chinchilla_optimal"]
    tokens: float | None = None
    gb: float | None = None
    ratio: float | None = None


class PlanRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    type: Literal["reserved", "on_demand", "custom"] = "reserved"
    rate: float | None = None


class ScenarioRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    mode: Literal["from_scratch", "continued_pretrain"]
    params: float = Field(gt=0)
    token_source: TokenSourceRequest = TokenSourceRequest(type="chinchilla_optimal")
    epochs: float = Field(default=1.0, ge=1)
    gpu: str | None = None
    gpu_count: int = Field(default=1, ge=1)
    plan: PlanRequest = PlanRequest()
    overhead_multiplier: float = Field(default=1.0, ge=1)


class SweepRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    base: ScenarioRequest
    field: Literal["model", "disk_gb", "tokens", "epochs", "gpu_count", "rate"]
    values: list[float]


def _field_errors(*items: tuple[str, str]) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"errors": [{"field": f, "message": m} for f, m in items]},
    )


def _build_scenario(request: ScenarioRequest, catalog) -> Scenario:
    """ScenarioRequest -> Scenario; ValueError carries a field-level message."""
    src = request.token_source
    try:
        if src.type == "explicit":
            if src.tokens is None:
                raise ValueError("tokens is required for type explicit")
            source = TokenSource.explicit(src.tokens)
        elif src.type == "from_disk":
            if src.gb is None:
                raise ValueError("gb is required for type from_disk")
            source = TokenSource.from_disk(src.gb, src.ratio)
        else:
            if src.tokens is not None or src.gb is not None or src.ratio is not None:
                raise ValueError("chinchilla_optimal takes no tokens/gb/ratio")
            source = TokenSource.chinchilla()
    except InvalidScenarioError:
        raise
    except ValueError as exc:
        raise ValueError(f"token_source: {exc}") from None

    if request.plan.type == "custom":
        if request.plan.rate is None:
            raise ValueError("plan.rate: required for type custom")
        plan = PricingPlan.custom(request.plan.rate)
    else:
        if request.plan.rate is not None:
            raise ValueError(f"plan.rate: not allowed for type {request.plan.type}")
        plan = PricingPlan.reserved() if request.plan.type == "reserved" else PricingPlan.on_demand()

    gpu_name = request.gpu if request.gpu is not None else "A100 80G"
    if gpu_name not in catalog:
        raise ValueError(f"gpu: unknown profile {gpu_name!r}")

    return Scenario(
        mode=Mode(request.mode),
        model_params=request.params,
        token_source=source,
        epochs=request.epochs,
        gpu=catalog[gpu_name],
        gpu_count=request.gpu_count,
        plan=plan,
        overhead_multiplier=request.overhead_multiplier,
    )


def _pretrain_payload(constants) -> dict:
    rows = []
    for row in pretrain_table(constants):
        entry = estimate_payload(row.estimate)
        entry["model_params"] = row.model_params
        entry["params_display"] = format_count(row.model_params, "params")
        entry["example_model"] = row.example_model
        rows.append(entry)
    return {"rows": rows}


def _continued_payload(constants) -> dict:
    grid = continued_table(CONTINUED_MODEL_SIZES, CONTINUED_DISK_SIZES_GB, constants)
    return {
        "model_sizes": list(grid.model_sizes),
        "model_displays": [format_count(m, "params") for m in grid.model_sizes],
        "disk_sizes_gb": list(grid.disk_sizes_gb),
        "disk_displays": [format_gigabytes(g) for g in grid.disk_sizes_gb],
        "usd": [list(row) for row in grid.usd],
        "usd_display": [[format_money(v) for v in row] for row in grid.usd],
    }


def create_app(config: PlannerConfig | None = None, ui_dir: str | None = None) -> FastAPI:
    """Build the service; all shared state is immutable after this call."""
    constants = apply_config(config)
    catalog = gpu_catalog(config)
    app = FastAPI(title="llmplan", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def _on_validation_error(request, exc):
        errors = []
        for err in exc.errors():
            loc = [str(part) for part in err.get("loc", ()) if part != "body"]
            errors.append({"field": ".".join(loc), "message": err.get("msg", "invalid")})
        return JSONResponse(status_code=400, content={"errors": errors})

    @app.exception_handler(StarletteHTTPException)
    async def _on_http_error(request, exc):
        return JSONResponse(
            status_code=exc.status_code,
            content={"errors": [{"message": str(exc.detail)}]},
        )

    @app.get("/api/v1/constants")
    def get_constants() -> dict:
        return dataclasses.asdict(constants)

    @app.post("/api/v1/estimate")
    def post_estimate(request: ScenarioRequest):
        try:
            scenario = _build_scenario(request, catalog)
        except InvalidScenarioError as exc:
            return JSONResponse(
                status_code=422,
                content={"errors": [{"field": "token_source", "message": str(exc)}]},
            )
        except ValueError as exc:
            field, _, message = str(exc).partition(": ")
            return _field_errors((field, message or str(exc)))
        payload = estimate_payload(estimate(scenario, constants))
        payload["mode"] = scenario.mode.value
        payload["model_params"] = scenario.model_params
        return payload

    @app.post("/api/v1/sweep")
    def post_sweep(request: SweepRequest):
        try:
            base = _build_scenario(request.base, catalog)
        except InvalidScenarioError as exc:
            return JSONResponse(
                status_code=422,
                content={"errors": [{"field": "base.token_source", "message": str(exc)}]},
            )
        except ValueError as exc:
            field, _, message = str(exc).partition(": ")
            return _field_errors((f"base.{field}", message or str(exc)))
        points = sweep(base, request.field, request.values, constants)
        return {
            "field": request.field,
            "points": [
                {
                    "value": p.value,
                    "estimate": estimate_payload(p.estimate) if p.estimate else None,
                    "error": p.error,
                }
                for p in points
            ],
        }

    @app.get("/api/v1/tables/{name}")
    def get_table(name: str):
        if name == "pretrain":
            return _pretrain_payload(constants)
        if name == "continued":
            return _continued_payload(constants)
        return JSONResponse(
            status_code=404,
            content={"errors": [{"message": f"unknown table {name!r}"}]},
        )

    _mount_ui(app, ui_dir)
    return app


def _mount_ui(app: FastAPI, ui_dir: str | None) -> None:
    path = ui_dir or os.environ.get(UI_DIR_ENV_VAR) or os.path.join("frontend", "dist")
    if os.path.isdir(path):
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=path, html=True), name="ui")
    else:

        @app.get("/")
        def index() -> dict:
            return {
                "service": "llmplan",
                "endpoints": [
                    "/api/v1/constants",
                    "/api/v1/estimate",
                    "/api/v1/sweep",
                    "/api/v1/tables/pretrain",
                    "/api/v1/tables/continued",
                ],
            }
