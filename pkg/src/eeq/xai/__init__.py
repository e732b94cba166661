"""Explainable analytics: feature construction, regression tree, statistics."""

from .features import FEATURE_NAMES, FeatureMatrix, build_feature_matrix
from .stats import (
    ModelMetrics,
    PccMatrix,
    model_metrics,
    pcc_matrix,
    pearson,
    r_squared,
    read_pcc_csv,
    rmse,
    write_pcc_csv,
)
from .tree import (
    FeatureImportance,
    Leaf,
    RegressionTree,
    SplitNode,
    TreeParams,
    feature_importance,
    fit_tree,
    node_impurity,
    predict,
    predict_matrix,
    split_decrease,
    tree_from_dict,
    tree_to_dict,
)

__all__ = [
    "FEATURE_NAMES",
    "FeatureMatrix",
    "build_feature_matrix",
    "ModelMetrics",
    "PccMatrix",
    "model_metrics",
    "pcc_matrix",
    "pearson",
    "r_squared",
    "read_pcc_csv",
    "rmse",
    "write_pcc_csv",
    "FeatureImportance",
    "Leaf",
    "RegressionTree",
    "SplitNode",
    "TreeParams",
    "feature_importance",
    "fit_tree",
    "node_impurity",
    "predict",
    "predict_matrix",
    "split_decrease",
    "tree_from_dict",
    "tree_to_dict",
]
