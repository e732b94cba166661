import numpy as np
import pytest

from eeq.burden import RateSchedule
from eeq.ingest import Snapshot
from eeq.xai import FEATURE_NAMES, build_feature_matrix

from conftest import build_record


def snapshot_of(*records):
    return Snapshot(
        records=tuple(sorted(records, key=lambda r: r.locale_id)),
        rates=RateSchedule(0.15, 1.2, 6.0),
        created_at="2026-01-01T00:00:00+00:00",
    )


def test_tenure_shares(record_factory):
    record = record_factory(owner_occupied=60.0, renter_occupied=40.0)
    matrix = build_feature_matrix(snapshot_of(record))
    assert matrix.column("renter_share")[0] == 0.4
    assert matrix.column("owner_share")[0] == 0.6


def test_all_white_population(record_factory):
    record = record_factory(
        race_counts={"white": 22000.0, "black": 0.0, "asian": 0.0, "other": 0.0},
    )
    matrix = build_feature_matrix(snapshot_of(record))
    assert matrix.column("white_share")[0] == 1.0
    assert matrix.column("black_share")[0] == 0.0
    assert matrix.column("asian_share")[0] == 0.0
    assert matrix.column("other_share")[0] == 0.0


def test_rows_align_with_sorted_locales(record_factory):
    records = [
        record_factory(locale_id="07930", annual_kwh_per_household=3.0),
        record_factory(locale_id="07001", annual_kwh_per_household=1.0),
        record_factory(locale_id="07500", annual_kwh_per_household=2.0),
    ]
    matrix = build_feature_matrix(snapshot_of(*records))
    assert matrix.row_ids == ("07001", "07500", "07930")
    assert matrix.target.tolist() == [1.0, 2.0, 3.0]
    assert matrix.n_rows == 3


def test_feature_set_and_order(record_factory):
    matrix = build_feature_matrix(snapshot_of(record_factory()))
    assert matrix.feature_names == FEATURE_NAMES
    assert matrix.feature_names.index("renter_share") < matrix.feature_names.index("owner_share")
    assert matrix.n_features == 16


def test_share_columns_sum_to_one(record_factory):
    matrix = build_feature_matrix(snapshot_of(record_factory()))
    row = matrix.rows[0]
    names = matrix.feature_names
    race = sum(row[names.index(n)] for n in ("white_share", "black_share", "asian_share", "other_share"))
    tenure = row[names.index("renter_share")] + row[names.index("owner_share")]
    built = sum(row[names.index(n)] for n in ("pre1960_share", "b1960_1979_share", "b1980_1999_share", "b2000_plus_share"))
    income = sum(row[names.index(n)] for n in ("low_income_share", "moderate_income_share", "high_income_share"))
    for total in (race, tenure, built, income):
        assert total == pytest.approx(1.0, rel=1e-12)


def test_passthrough_features(record_factory):
    record = record_factory(median_household_income=52000.0, program_participation_rate=0.2)
    matrix = build_feature_matrix(snapshot_of(record))
    assert matrix.column("median_household_income")[0] == 52000.0
    assert matrix.column("participation_rate")[0] == 0.2


def test_all_values_finite(mini_snapshot):
    matrix = build_feature_matrix(mini_snapshot)
    assert np.isfinite(matrix.rows).all()
    assert np.isfinite(matrix.target).all()
