"""Correlation and fit statistics.

The correlation core runs in exact rational arithmetic: the squared
correlation is a ratio of integers, so perfectly collinear inputs give
exactly +/-1, Cauchy-Schwarz caps the magnitude at 1 with no clamping
fudge, and the only rounding is the final conversion to float. A
correlation against a constant vector is undefined and reported as
``None`` rather than NaN, which keeps JSON serialization and comparisons
sane. The fit metrics use exactly-rounded float sums (``math.fsum``).
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, Union

from ..errors import LengthMismatchError, ZeroVarianceTargetError
from .features import FeatureMatrix


def pearson(x: Sequence[float], y: Sequence[float]) -> Optional[float]:
    """Pearson correlation of two equal-length vectors, or None if undefined.

    Undefined means either vector has zero variance (all entries equal).
    Results land in [-1, 1] by construction.
    """
    if len(x) != len(y):
        raise LengthMismatchError(len(x), len(y))
    n = len(x)
    if n == 0:
        raise LengthMismatchError(0, 0)
    if min(x) == max(x) or min(y) == max(y):
        return None
    exact_x = [Fraction(float(v)) for v in x]
    exact_y = [Fraction(float(v)) for v in y]
    mean_x = sum(exact_x) / n
    mean_y = sum(exact_y) / n
    dev_x = [v - mean_x for v in exact_x]
    dev_y = [v - mean_y for v in exact_y]
    cov = sum(a * b for a, b in zip(dev_x, dev_y))
    var_x = sum(a * a for a in dev_x)
    var_y = sum(b * b for b in dev_y)
    r_squared_exact = cov * cov / (var_x * var_y)
    magnitude = math.sqrt(float(min(r_squared_exact, 1)))
    return magnitude if cov >= 0 else -magnitude


def r_squared(predicted: Sequence[float], actual: Sequence[float]) -> float:
    """Coefficient of determination: 1 - SS_res / SS_tot."""
    if len(predicted) != len(actual):
        raise LengthMismatchError(len(predicted), len(actual))
    if len(actual) == 0:
        raise LengthMismatchError(0, 0)
    if min(actual) == max(actual):
        raise ZeroVarianceTargetError("actual values are constant; r_squared is undefined")
    mean = math.fsum(actual) / len(actual)
    ss_res = math.fsum((a - p) ** 2 for p, a in zip(predicted, actual))
    ss_tot = math.fsum((a - mean) ** 2 for a in actual)
    return 1.0 - ss_res / ss_tot


def rmse(predicted: Sequence[float], actual: Sequence[float]) -> float:
    """Root mean squared error, in target units. Zero iff the vectors match exactly."""
    if len(predicted) != len(actual):
        raise LengthMismatchError(len(predicted), len(actual))
    if len(actual) == 0:
        raise LengthMismatchError(0, 0)
    return math.sqrt(math.fsum((a - p) ** 2 for p, a in zip(predicted, actual)) / len(actual))


@dataclass(frozen=True)
class ModelMetrics:
    """Training-fit summary. r_squared is None when the target is constant."""

    r_squared: Optional[float]
    rmse: float

    def as_dict(self) -> dict:
        return {"r_squared": self.r_squared, "rmse": self.rmse}


def model_metrics(predicted: Sequence[float], actual: Sequence[float]) -> ModelMetrics:
    try:
        r2 = r_squared(predicted, actual)
    except ZeroVarianceTargetError:
        r2 = None
    return ModelMetrics(r_squared=r2, rmse=rmse(predicted, actual))


@dataclass(frozen=True)
class PccMatrix:
    """Labeled Pearson correlation matrix; None marks undefined entries."""

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    values: tuple[tuple[Optional[float], ...], ...]

    def as_dict(self) -> dict:
        return {
            "row_labels": list(self.row_labels),
            "col_labels": list(self.col_labels),
            "values": [list(row) for row in self.values],
        }


def pcc_matrix(
    matrix: FeatureMatrix,
    group_a: Sequence[str],
    group_b: Sequence[str],
) -> PccMatrix:
    """Pairwise Pearson correlations between two groups of feature columns.

    Labels keep the requested order. Raises UnknownFeatureError for a name
    not present in the matrix.
    """
    cols_a = [matrix.column(name) for name in group_a]
    cols_b = [matrix.column(name) for name in group_b]
    values = tuple(
        tuple(pearson(col_a, col_b) for col_b in cols_b) for col_a in cols_a
    )
    return PccMatrix(
        row_labels=tuple(group_a),
        col_labels=tuple(group_b),
        values=values,
    )


def write_pcc_csv(matrix: PccMatrix, destination: Union[str, Path]) -> None:
    """Write a labeled CSV: header row of column labels, one label per data row.

    Values are full-precision; undefined entries become empty cells.
    """
    with open(destination, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow([""] + list(matrix.col_labels))
        for label, row in zip(matrix.row_labels, matrix.values):
            writer.writerow([label] + ["" if v is None else repr(v) for v in row])


def read_pcc_csv(source: Union[str, Path]) -> PccMatrix:
    """Read a matrix written by :func:`write_pcc_csv` without loss."""
    with open(source, "r", encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader)
        col_labels = tuple(header[1:])
        row_labels = []
        values = []
        for line in reader:
            row_labels.append(line[0])
            values.append(tuple(None if cell == "" else float(cell) for cell in line[1:]))
    return PccMatrix(row_labels=tuple(row_labels), col_labels=col_labels, values=tuple(values))
