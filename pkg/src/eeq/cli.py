"""Operator command line: ingest tables, run analyses, query burden, serve.

Exit codes: 0 success, 1 configuration or data error, 2 not-found.
Diagnostics go to stderr, results to stdout. The analyze and pcc report
paths render figures next to their JSON/CSV outputs unless --no-figures
is passed.
"""

from __future__ import annotations

import json
import sys
from datetime import datetime, timezone
from pathlib import Path

import click

from . import __version__
from .api import ApiConfig, resolve_snapshot_path, serve
from .burden import BurdenStatus, RateSchedule, evaluate_zip
from .errors import EeqError, UnknownLocaleError
from .figures import render_importance_chart, render_pcc_heatmap
from .ingest import (
    Snapshot,
    join_tables,
    load_snapshot,
    read_tables_dir,
    save_snapshot,
)
from .xai import (
    TreeParams,
    build_feature_matrix,
    feature_importance,
    fit_tree,
    model_metrics,
    pcc_matrix,
    predict_matrix,
    tree_to_dict,
    write_pcc_csv,
)


def _fail(message: str, code: int = 1) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


@click.group()
@click.version_option(version=__version__, prog_name="eeq")
def main() -> None:
    """Energy-equity analytics toolkit."""


@main.command()
@click.option("--data-dir", required=True, type=click.Path(file_okay=False), help="Directory with the eight canonical CSV tables.")
@click.option("--rates-file", required=True, type=click.Path(dir_okay=False), help="JSON rate schedule.")
@click.option("--out", required=True, type=click.Path(dir_okay=False), help="Snapshot output path.")
def ingest(data_dir: str, rates_file: str, out: str) -> None:
    """Parse and join the canonical tables into a snapshot file."""
    try:
        with open(rates_file, "r", encoding="utf-8") as handle:
            rates = RateSchedule.from_dict(json.load(handle))
        tables = read_tables_dir(data_dir)
        result = join_tables(tables)
        snapshot = Snapshot(
            records=result.records,
            rates=rates,
            created_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
            source_note=f"ingested from {data_dir}",
        )
        save_snapshot(snapshot, out)
    except (EeqError, OSError, json.JSONDecodeError) as exc:
        _fail(str(exc))
    click.echo(f"joined={len(result.records)} dropped={result.dropped}")
    click.echo(f"wrote {out}")


@main.command()
@click.option("--snapshot", "snapshot_path", required=True, type=click.Path(dir_okay=False))
@click.option("--out-dir", required=True, type=click.Path(file_okay=False))
@click.option("--max-depth", default=6, show_default=True, type=int)
@click.option("--min-samples-leaf", default=5, show_default=True, type=int)
@click.option("--min-impurity-decrease", default=0.0, show_default=True, type=float)
@click.option("--no-figures", is_flag=True, help="Skip rendering importance.png.")
def analyze(
    snapshot_path: str,
    out_dir: str,
    max_depth: int,
    min_samples_leaf: int,
    min_impurity_decrease: float,
    no_figures: bool,
) -> None:
    """Fit the consumption model; write importances, metrics, and the tree."""
    try:
        snapshot = load_snapshot(snapshot_path)
        params = TreeParams(
            max_depth=max_depth,
            min_samples_leaf=min_samples_leaf,
            min_impurity_decrease=min_impurity_decrease,
        )
        params.validate()
        matrix = build_feature_matrix(snapshot)
        tree = fit_tree(matrix, params)
        importance = feature_importance(tree, matrix.feature_names)
        predictions = predict_matrix(tree, matrix)
        # on a constant target R^2 is undefined; serialized as null
        metrics = model_metrics(predictions, matrix.target)
    except (EeqError, OSError, ValueError) as exc:
        _fail(str(exc))

    destination = Path(out_dir)
    destination.mkdir(parents=True, exist_ok=True)
    _write_json(destination / "importance.json", [
        {"feature": name, "weight": weight} for name, weight in importance.pairs
    ])
    _write_json(destination / "metrics.json", metrics.as_dict())
    _write_json(destination / "tree.json", tree_to_dict(tree))
    if not no_figures:
        render_importance_chart(importance, destination / "importance.png")
    click.echo(f"wrote importance.json, metrics.json, tree.json to {destination}")


@main.command()
@click.option("--snapshot", "snapshot_path", required=True, type=click.Path(dir_okay=False))
@click.option("--zip", "zip_code", required=True)
def burden(snapshot_path: str, zip_code: str) -> None:
    """Print one locale's energy burden, status, and tips when overburdened."""
    try:
        snapshot = load_snapshot(snapshot_path)
    except (EeqError, OSError) as exc:
        _fail(str(exc))
    try:
        report = evaluate_zip(zip_code, snapshot)
    except UnknownLocaleError as exc:
        _fail(str(exc), code=2)
    except EeqError as exc:
        _fail(str(exc))
    click.echo(f"{report.energy_burden_pct:.2f}%")
    click.echo(report.message)
    if report.status is BurdenStatus.OVERBURDENED:
        for tip in report.tips:
            click.echo(f"- {tip}")


@main.command()
@click.option("--snapshot", "snapshot_path", required=True, type=click.Path(dir_okay=False))
@click.option("--group-a", required=True, help="Comma-separated feature names (rows).")
@click.option("--group-b", required=True, help="Comma-separated feature names (columns).")
@click.option("--out", required=True, type=click.Path(dir_okay=False))
@click.option("--no-figures", is_flag=True, help="Skip rendering the heatmap PNG.")
def pcc(snapshot_path: str, group_a: str, group_b: str, out: str, no_figures: bool) -> None:
    """Write a labeled correlation matrix CSV (and heatmap) for two feature groups."""
    names_a = [name.strip() for name in group_a.split(",") if name.strip()]
    names_b = [name.strip() for name in group_b.split(",") if name.strip()]
    try:
        snapshot = load_snapshot(snapshot_path)
        matrix = build_feature_matrix(snapshot)
        result = pcc_matrix(matrix, names_a, names_b)
        write_pcc_csv(result, out)
    except (EeqError, OSError) as exc:
        _fail(str(exc))
    if not no_figures:
        render_pcc_heatmap(result, Path(out).with_suffix(".png"))
    click.echo(f"wrote {out}")


@main.command(name="serve")
@click.option("--snapshot", "snapshot_path", default=None, type=click.Path(dir_okay=False),
              help="Snapshot path; falls back to $EEQ_SNAPSHOT.")
@click.option("--bind", default="127.0.0.1:8000", show_default=True)
@click.option("--state-average", default=None, type=float,
              help="Override the snapshot's state-average burden threshold.")
@click.option("--assets", default=None, type=click.Path(file_okay=False),
              help="Portal build directory to serve at /.")
def serve_cmd(snapshot_path: str, bind: str, state_average: float, assets: str) -> None:
    """Run the JSON API (and portal, if assets are given) until interrupted."""
    try:
        config = ApiConfig(
            bind_address=bind,
            snapshot_path=resolve_snapshot_path(snapshot_path),
            state_average_override=state_average,
            static_assets_dir=assets,
        )
        config.host_and_port()
    except ValueError as exc:
        _fail(str(exc))
    try:
        serve(config)
    except (EeqError, OSError, ValueError) as exc:
        _fail(str(exc))
    except KeyboardInterrupt:
        pass


def _write_json(path: Path, payload) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=2)
        handle.write("\n")


if __name__ == "__main__":
    main()
