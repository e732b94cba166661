"""Read-only JSON API over a loaded snapshot and a model fitted at startup.

Every /api/* response is JSON; errors carry an ``error`` field. The snapshot
and fitted model never change after the app is built, so handlers are pure
reads and safe under any request interleaving. When an assets directory is
configured, the portal build is served from the same process under ``/``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from fastapi import FastAPI, Query
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .burden import evaluate_zip
from .errors import EeqError, UnknownLocaleError
from .ingest import Snapshot, load_snapshot
from .xai import (
    FeatureImportance,
    RegressionTree,
    TreeParams,
    build_feature_matrix,
    feature_importance,
    fit_tree,
    pcc_matrix,
)

SNAPSHOT_ENV_VAR = "EEQ_SNAPSHOT"


@dataclass(frozen=True)
class ApiConfig:
    """Startup configuration for the service process."""

    bind_address: str
    snapshot_path: str
    state_average_override: Optional[float] = None
    static_assets_dir: Optional[str] = None

    def host_and_port(self) -> tuple[str, int]:
        host, _, port_text = self.bind_address.rpartition(":")
        if not host or not port_text:
            raise ValueError(f"bind_address must be host:port, got {self.bind_address!r}")
        try:
            port = int(port_text)
        except ValueError:
            raise ValueError(f"invalid port {port_text!r}") from None
        if not 1 <= port <= 65535:
            raise ValueError(f"port must be in [1, 65535], got {port}")
        return host, port


def resolve_snapshot_path(flag_value: Optional[str]) -> str:
    """Snapshot path from the CLI flag, falling back to the environment."""
    if flag_value:
        return flag_value
    env_value = os.environ.get(SNAPSHOT_ENV_VAR)
    if env_value:
        return env_value
    raise ValueError(f"no snapshot path given (flag or {SNAPSHOT_ENV_VAR})")


def _is_valid_zip_syntax(locale_id: str) -> bool:
    # ASCII letters/digits only; str.isalnum alone would admit unicode ids
    return len(locale_id) == 5 and locale_id.isascii() and locale_id.isalnum()


def _error(status_code: int, payload: dict) -> JSONResponse:
    return JSONResponse(status_code=status_code, content=payload)


def create_app(
    snapshot: Snapshot,
    *,
    state_average: Optional[float] = None,
    assets_dir: Optional[Union[str, Path]] = None,
    tree_params: Optional[TreeParams] = None,
) -> FastAPI:
    """Build the service around an already-loaded snapshot.

    The consumption model is fitted here, once; if fitting fails the
    importance endpoint reports 503 and everything else still works.
    """
    if state_average is not None:
        snapshot = snapshot.with_state_average(state_average)
    matrix = build_feature_matrix(snapshot)

    model: Optional[RegressionTree]
    importance: Optional[FeatureImportance]
    try:
        model = fit_tree(matrix, tree_params)
        importance = feature_importance(model, matrix.feature_names)
    except EeqError:
        model = None
        importance = None

    app = FastAPI(title="eeq", docs_url=None, redoc_url=None)
    app.state.snapshot = snapshot
    app.state.matrix = matrix
    app.state.model = model
    app.state.importance = importance

    @app.get("/api/health")
    def health() -> dict:
        return {
            "status": "ok",
            "locales": len(snapshot.records),
            "snapshot_created_at": snapshot.created_at,
        }

    @app.get("/api/burden")
    def burden(zip_code: Optional[str] = Query(default=None, alias="zip")):
        if zip_code is None or not _is_valid_zip_syntax(zip_code):
            return _error(400, {"error": "invalid_zip"})
        try:
            report = evaluate_zip(zip_code, app.state.snapshot)
        except UnknownLocaleError:
            return _error(404, {"error": "unknown_locale"})
        return report.as_dict()

    @app.get("/api/feature-importance")
    def importance_endpoint():
        current = app.state.importance
        if current is None:
            return _error(503, {"error": "model_unavailable"})
        return [{"feature": name, "weight": weight} for name, weight in current.pairs]

    @app.get("/api/pcc")
    def pcc(group_a: Optional[str] = None, group_b: Optional[str] = None):
        if not group_a or not group_b:
            return _error(400, {"error": "missing_parameter", "expected": ["group_a", "group_b"]})
        names_a = [name.strip() for name in group_a.split(",")]
        names_b = [name.strip() for name in group_b.split(",")]
        try:
            matrix_result = pcc_matrix(app.state.matrix, names_a, names_b)
        except EeqError as exc:
            feature = getattr(exc, "feature", None)
            return _error(400, {"error": "unknown_feature", "feature": feature})
        return matrix_result.as_dict()

    @app.get("/api/locales")
    def locales() -> list[dict]:
        return [
            {"locale_id": record.locale_id, "name": record.name}
            for record in snapshot.records
        ]

    if assets_dir is not None:
        app.mount("/", StaticFiles(directory=str(assets_dir), html=True), name="portal")

    return app


def create_app_from_config(config: ApiConfig) -> FastAPI:
    snapshot = load_snapshot(config.snapshot_path)
    return create_app(
        snapshot,
        state_average=config.state_average_override,
        assets_dir=config.static_assets_dir,
    )


def serve(config: ApiConfig) -> None:
    """Load the snapshot, then block serving requests until interrupted."""
    import uvicorn

    host, port = config.host_and_port()
    app = create_app_from_config(config)
    uvicorn.run(app, host=host, port=port, log_level="info")
