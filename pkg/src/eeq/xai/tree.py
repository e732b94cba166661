"""Greedy binary regression tree with variance impurity.

Split selection is fully deterministic and reproducible across runs and
platforms. The contract:

* Impurity of a node is the population variance of its targets, computed
  with exactly-rounded sums (``math.fsum``), so it depends only on the
  multiset of values.
* A candidate threshold is the midpoint between consecutive distinct sorted
  values of one feature; rows go left iff ``value <= threshold``.
* The decrease for a candidate is
  ``I(node) - ((n_L/n) * I(left) + (n_R/n) * I(right))``, clamped at zero
  (variance reduction is nonnegative in exact arithmetic). The two weighted
  terms are summed before subtracting, so mirrored partitions produced by
  complementary features score bit-identically.
* The winning candidate maximizes the decrease; exact ties resolve to the
  lowest feature index, then the lowest threshold.

Growth stops at max_depth, when a child would fall below min_samples_leaf,
when the node's targets are constant, or when the best decrease is below
min_impurity_decrease.

A fast vectorized pass ranks candidates approximately; every candidate
within a small tolerance of the apparent best is then re-scored with the
exact rule above. Only the exact scores pick the winner.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from ..errors import DimensionMismatchError, InsufficientDataError
from .features import FeatureMatrix

#: Fast-scan scores within this fraction of the node impurity of the apparent
#: best are re-scored exactly. The fast scan is accurate to ~1e-12 of the
#: impurity, so the exact winner always survives the cut.
_RESCORE_BAND = 1e-6


@dataclass(frozen=True)
class TreeParams:
    max_depth: int = 6
    min_samples_leaf: int = 5
    min_impurity_decrease: float = 0.0

    def validate(self) -> None:
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")
        if self.min_samples_leaf < 1:
            raise ValueError("min_samples_leaf must be >= 1")
        if self.min_impurity_decrease < 0:
            raise ValueError("min_impurity_decrease must be >= 0")

    def as_dict(self) -> dict:
        return {
            "max_depth": self.max_depth,
            "min_samples_leaf": self.min_samples_leaf,
            "min_impurity_decrease": self.min_impurity_decrease,
        }


@dataclass(frozen=True)
class Leaf:
    value: float
    n_samples: int


@dataclass(frozen=True)
class SplitNode:
    feature_index: int
    threshold: float
    left: "TreeNode"
    right: "TreeNode"
    n_samples: int
    impurity_decrease: float


TreeNode = Union[SplitNode, Leaf]


@dataclass(frozen=True)
class RegressionTree:
    root: TreeNode
    feature_names: tuple[str, ...]
    n_samples: int
    params: TreeParams


@dataclass(frozen=True)
class FeatureImportance:
    """(feature, weight) pairs sorted by descending weight, ties by name."""

    pairs: tuple[tuple[str, float], ...]

    def as_dict(self) -> dict[str, float]:
        return dict(self.pairs)

    def weight(self, feature: str) -> float:
        return self.as_dict()[feature]

    def top(self, k: int) -> tuple[str, ...]:
        return tuple(name for name, _ in self.pairs[:k])


def node_impurity(y: np.ndarray) -> float:
    """Population variance via exactly-rounded sums; order-independent."""
    values = y.tolist()
    if min(values) == max(values):
        return 0.0
    mean = math.fsum(values) / len(values)
    return math.fsum((v - mean) ** 2 for v in values) / len(values)


def split_decrease(y: np.ndarray, left_mask: np.ndarray) -> float:
    """Exact impurity decrease for one candidate partition (the documented rule)."""
    n = len(y)
    n_left = int(left_mask.sum())
    n_right = n - n_left
    weighted_children = (n_left / n) * node_impurity(y[left_mask]) + (
        n_right / n
    ) * node_impurity(y[~left_mask])
    decrease = node_impurity(y) - weighted_children
    return decrease if decrease > 0.0 else 0.0


def _leaf(y: np.ndarray) -> Leaf:
    values = y.tolist()
    if min(values) == max(values):
        return Leaf(value=values[0], n_samples=len(values))
    return Leaf(value=math.fsum(values) / len(values), n_samples=len(values))


def _candidate_shortlist(
    X: np.ndarray, y: np.ndarray, min_samples_leaf: int
) -> list[tuple[int, float]]:
    """Approximately rank all candidates; return those near the apparent best.

    Candidates come back ordered by (feature index, threshold) ascending,
    which is the tie-break order for the exact pass.
    """
    n, d = X.shape
    centered = y - y.mean()
    node_scale = float(centered @ centered) / n
    per_feature: list[tuple[int, np.ndarray, np.ndarray, np.ndarray]] = []
    best_fast = -math.inf
    sizes = np.arange(1, n)
    size_ok = (sizes >= min_samples_leaf) & ((n - sizes) >= min_samples_leaf)
    for j in range(d):
        order = np.argsort(X[:, j], kind="stable")
        xs = X[order, j]
        valid = (xs[1:] > xs[:-1]) & size_ok
        if not valid.any():
            continue
        ys = centered[order]
        left_sums = np.cumsum(ys)[:-1]
        total = left_sums[-1] + ys[-1]
        right_sums = total - left_sums
        gains = (
            left_sums**2 / sizes + right_sums**2 / (n - sizes) - total**2 / n
        ) / n
        gains[~valid] = -math.inf
        per_feature.append((j, xs, gains, valid))
        feature_best = gains.max()
        if feature_best > best_fast:
            best_fast = feature_best
    if not per_feature:
        return []
    cutoff = best_fast - _RESCORE_BAND * max(node_scale, abs(best_fast))
    shortlist: list[tuple[int, float]] = []
    for j, xs, gains, valid in per_feature:
        for k in np.nonzero(valid & (gains >= cutoff))[0]:
            shortlist.append((j, (xs[k] + xs[k + 1]) / 2.0))
    return shortlist


def _best_split(
    X: np.ndarray, y: np.ndarray, min_samples_leaf: int
) -> Optional[tuple[int, float, float]]:
    """Exact-scored best (feature_index, threshold, decrease), or None."""
    n = len(y)
    best: Optional[tuple[int, float, float]] = None
    for feature_index, threshold in _candidate_shortlist(X, y, min_samples_leaf):
        left_mask = X[:, feature_index] <= threshold
        n_left = int(left_mask.sum())
        if n_left < min_samples_leaf or n - n_left < min_samples_leaf:
            continue  # midpoint rounded onto a data value; partition collapsed
        decrease = split_decrease(y, left_mask)
        if best is None or decrease > best[2]:
            best = (feature_index, threshold, decrease)
    return best


def _grow(X: np.ndarray, y: np.ndarray, depth: int, params: TreeParams) -> TreeNode:
    n = len(y)
    if (
        depth >= params.max_depth
        or n < 2 * params.min_samples_leaf
        or float(y.min()) == float(y.max())
    ):
        return _leaf(y)
    best = _best_split(X, y, params.min_samples_leaf)
    if best is None or best[2] < params.min_impurity_decrease:
        return _leaf(y)
    feature_index, threshold, decrease = best
    left_mask = X[:, feature_index] <= threshold
    return SplitNode(
        feature_index=feature_index,
        threshold=threshold,
        left=_grow(X[left_mask], y[left_mask], depth + 1, params),
        right=_grow(X[~left_mask], y[~left_mask], depth + 1, params),
        n_samples=n,
        impurity_decrease=decrease,
    )


def fit_tree(matrix: FeatureMatrix, params: Optional[TreeParams] = None) -> RegressionTree:
    """Fit a regression tree predicting the matrix target from its features."""
    params = params or TreeParams()
    params.validate()
    if matrix.n_rows < 1:
        raise InsufficientDataError("at least one row is required to fit a tree")
    root = _grow(matrix.rows, matrix.target, 0, params)
    return RegressionTree(
        root=root,
        feature_names=matrix.feature_names,
        n_samples=matrix.n_rows,
        params=params,
    )


def predict(tree: RegressionTree, row: Sequence[float]) -> float:
    """Value of the leaf reached by descending the tree (left iff value <= threshold)."""
    if len(row) != len(tree.feature_names):
        raise DimensionMismatchError(len(tree.feature_names), len(row))
    node = tree.root
    while isinstance(node, SplitNode):
        node = node.left if row[node.feature_index] <= node.threshold else node.right
    return node.value


def predict_matrix(tree: RegressionTree, matrix: FeatureMatrix) -> np.ndarray:
    return np.array([predict(tree, row) for row in matrix.rows], dtype=np.float64)


def feature_importance(tree: RegressionTree, feature_names: Sequence[str]) -> FeatureImportance:
    """Normalized sample-weighted impurity decrease per feature.

    A single-leaf tree (or one whose splits all have zero decrease) reports
    every weight as zero; otherwise weights are nonnegative and sum to one.
    Output is sorted by descending weight, ties by feature name.
    """
    contributions: dict[int, list[float]] = {}

    def walk(node: TreeNode) -> None:
        if isinstance(node, SplitNode):
            contributions.setdefault(node.feature_index, []).append(
                (node.n_samples / tree.n_samples) * node.impurity_decrease
            )
            walk(node.left)
            walk(node.right)

    walk(tree.root)
    raw = {j: math.fsum(parts) for j, parts in contributions.items()}
    total = math.fsum(raw.values())
    if total > 0.0:
        weights = [(name, raw.get(j, 0.0) / total) for j, name in enumerate(feature_names)]
    else:
        weights = [(name, 0.0) for name in feature_names]
    weights.sort(key=lambda pair: (-pair[1], pair[0]))
    return FeatureImportance(pairs=tuple(weights))


def tree_to_dict(tree: RegressionTree) -> dict:
    def encode(node: TreeNode) -> dict:
        if isinstance(node, Leaf):
            return {"kind": "leaf", "value": node.value, "n_samples": node.n_samples}
        return {
            "kind": "split",
            "feature_index": node.feature_index,
            "feature": tree.feature_names[node.feature_index],
            "threshold": node.threshold,
            "n_samples": node.n_samples,
            "impurity_decrease": node.impurity_decrease,
            "left": encode(node.left),
            "right": encode(node.right),
        }

    return {
        "feature_names": list(tree.feature_names),
        "n_samples": tree.n_samples,
        "params": tree.params.as_dict(),
        "root": encode(tree.root),
    }


def tree_from_dict(data: dict) -> RegressionTree:
    def decode(node: dict) -> TreeNode:
        if node["kind"] == "leaf":
            return Leaf(value=node["value"], n_samples=node["n_samples"])
        return SplitNode(
            feature_index=node["feature_index"],
            threshold=node["threshold"],
            left=decode(node["left"]),
            right=decode(node["right"]),
            n_samples=node["n_samples"],
            impurity_decrease=node["impurity_decrease"],
        )

    return RegressionTree(
        root=decode(data["root"]),
        feature_names=tuple(data["feature_names"]),
        n_samples=data["n_samples"],
        params=TreeParams(**data["params"]),
    )
