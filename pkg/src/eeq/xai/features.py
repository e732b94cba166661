"""Turn a snapshot into a numeric feature matrix.

Counts become shares of their natural denominator (population, occupied
units, housing stock, binned households) so locales of different sizes are
comparable; median income and the participation rate pass through as-is.
The target column is annual electricity use per household.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import UnknownFeatureError
from ..ingest import INCOME_BINS, RACE_GROUPS, YEAR_BUILT_BINS, Snapshot

#: Share-based feature names, in matrix column order.
FEATURE_NAMES: tuple[str, ...] = (
    "white_share",
    "black_share",
    "asian_share",
    "other_share",
    "hispanic_share",
    "renter_share",
    "owner_share",
    "pre1960_share",
    "b1960_1979_share",
    "b1980_1999_share",
    "b2000_plus_share",
    "low_income_share",
    "moderate_income_share",
    "high_income_share",
    "median_household_income",
    "participation_rate",
)


@dataclass(eq=False)
class FeatureMatrix:
    """Feature columns, target vector, and the locale ids aligned with the rows."""

    feature_names: tuple[str, ...]
    rows: np.ndarray
    target: np.ndarray
    row_ids: tuple[str, ...]

    _name_to_index: dict = field(init=False, repr=False)

    def __post_init__(self):
        self.rows = np.asarray(self.rows, dtype=np.float64)
        self.target = np.asarray(self.target, dtype=np.float64)
        if self.rows.ndim != 2 or self.rows.shape[0] < 1 or self.rows.shape[1] < 1:
            raise ValueError("feature matrix must be 2-D with at least one row and column")
        if self.rows.shape[1] != len(self.feature_names):
            raise ValueError("feature_names length must match the number of columns")
        if len(set(self.feature_names)) != len(self.feature_names):
            raise ValueError("feature names must be unique")
        if self.target.shape != (self.rows.shape[0],):
            raise ValueError("target length must match the number of rows")
        if len(self.row_ids) != self.rows.shape[0]:
            raise ValueError("row_ids length must match the number of rows")
        if not np.isfinite(self.rows).all() or not np.isfinite(self.target).all():
            raise ValueError("feature matrix must not contain non-finite values")
        self._name_to_index = {name: i for i, name in enumerate(self.feature_names)}

    @property
    def n_rows(self) -> int:
        return self.rows.shape[0]

    @property
    def n_features(self) -> int:
        return self.rows.shape[1]

    def column(self, name: str) -> np.ndarray:
        if name not in self._name_to_index:
            raise UnknownFeatureError(name)
        return self.rows[:, self._name_to_index[name]]


def build_feature_matrix(snapshot: Snapshot) -> FeatureMatrix:
    """One row of share-based features per locale, sorted by locale_id."""
    rows = []
    target = []
    for rec in snapshot.records:
        pop = rec.total_population
        occupied = rec.owner_occupied + rec.renter_occupied
        stock = sum(rec.year_built_counts.values())
        binned = sum(rec.income_bin_counts.values())
        row = [rec.race_counts[g] / pop for g in RACE_GROUPS]
        row.append(rec.hispanic_count / pop)
        row.append(rec.renter_occupied / occupied)
        row.append(rec.owner_occupied / occupied)
        row.extend(rec.year_built_counts[b] / stock for b in YEAR_BUILT_BINS)
        row.extend(rec.income_bin_counts[b] / binned for b in INCOME_BINS)
        row.append(rec.median_household_income)
        row.append(rec.program_participation_rate)
        rows.append(row)
        target.append(rec.annual_kwh_per_household)
    return FeatureMatrix(
        feature_names=FEATURE_NAMES,
        rows=np.array(rows, dtype=np.float64),
        target=np.array(target, dtype=np.float64),
        row_ids=tuple(rec.locale_id for rec in snapshot.records),
    )
