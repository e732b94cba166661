"""Energy-equity analytics engine.

Ingests demographic and utility tables into locale snapshots, computes
household energy burden, fits an explainable regression tree over locale
features, builds Pearson correlation matrices, and serves everything over
JSON for the companion portal.
"""

from .burden import (
    DEFAULT_STATE_AVERAGE_PCT,
    BurdenReport,
    BurdenStatus,
    RateSchedule,
    compute_energy_burden,
    evaluate_zip,
    tips_catalog,
)
from .errors import EeqError
from .ingest import (
    JoinResult,
    LocaleRecord,
    RawTable,
    Snapshot,
    TableKind,
    join_tables,
    load_snapshot,
    parse_table,
    read_tables_dir,
    save_snapshot,
)
from .xai import (
    FeatureImportance,
    FeatureMatrix,
    PccMatrix,
    RegressionTree,
    TreeParams,
    build_feature_matrix,
    feature_importance,
    fit_tree,
    pcc_matrix,
    pearson,
    predict,
    r_squared,
    rmse,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_STATE_AVERAGE_PCT",
    "BurdenReport",
    "BurdenStatus",
    "RateSchedule",
    "compute_energy_burden",
    "evaluate_zip",
    "tips_catalog",
    "EeqError",
    "JoinResult",
    "LocaleRecord",
    "RawTable",
    "Snapshot",
    "TableKind",
    "join_tables",
    "load_snapshot",
    "parse_table",
    "read_tables_dir",
    "save_snapshot",
    "FeatureImportance",
    "FeatureMatrix",
    "PccMatrix",
    "RegressionTree",
    "TreeParams",
    "build_feature_matrix",
    "feature_importance",
    "fit_tree",
    "pcc_matrix",
    "pearson",
    "predict",
    "r_squared",
    "rmse",
    "__version__",
]
