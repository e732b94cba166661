from __future__ import annotations

import json
import random
from pathlib import Path

import pytest

from eeq.burden import RateSchedule
from eeq.ingest import (
    INCOME_BINS,
    RACE_GROUPS,
    YEAR_BUILT_BINS,
    LocaleRecord,
    Snapshot,
    join_tables,
    read_tables_dir,
)

FIXTURES = Path(__file__).parent / "fixtures"
REPO_ROOT = Path(__file__).resolve().parents[1]
SYNTHETIC_DIR = REPO_ROOT / "data" / "synthetic"


@pytest.fixture(scope="session")
def mini_data_dir() -> Path:
    return FIXTURES / "mini"


@pytest.fixture(scope="session")
def malformed_dir() -> Path:
    return FIXTURES / "malformed"


@pytest.fixture(scope="session")
def mini_rates(mini_data_dir) -> RateSchedule:
    with open(mini_data_dir / "rates.json", "r", encoding="utf-8") as handle:
        return RateSchedule.from_dict(json.load(handle))


@pytest.fixture(scope="session")
def mini_snapshot(mini_data_dir, mini_rates) -> Snapshot:
    result = join_tables(read_tables_dir(mini_data_dir))
    return Snapshot(
        records=result.records,
        rates=mini_rates,
        created_at="2026-01-15T00:00:00+00:00",
        source_note="mini fixture",
    )


@pytest.fixture(scope="session")
def synthetic_dir() -> Path:
    return SYNTHETIC_DIR


@pytest.fixture(scope="session")
def synthetic_snapshot(synthetic_dir) -> Snapshot:
    with open(synthetic_dir / "rates.json", "r", encoding="utf-8") as handle:
        rates = RateSchedule.from_dict(json.load(handle))
    result = join_tables(read_tables_dir(synthetic_dir))
    return Snapshot(
        records=result.records,
        rates=rates,
        created_at="2026-01-15T00:00:00+00:00",
        source_note="bundled synthetic dataset",
    )


def build_record(locale_id: str = "07043", **overrides) -> LocaleRecord:
    """A valid record with sane defaults; keyword overrides for the rest."""
    fields = {
        "locale_id": locale_id,
        "name": locale_id,
        "race_counts": {"white": 12000.0, "black": 6000.0, "asian": 2500.0, "other": 1500.0},
        "hispanic_count": 4000.0,
        "total_population": 22000.0,
        "owner_occupied": 5000.0,
        "renter_occupied": 3000.0,
        "year_built_counts": {
            "pre1960": 2500.0,
            "b1960_1979": 2000.0,
            "b1980_1999": 2200.0,
            "b2000_plus": 1300.0,
        },
        "income_bin_counts": {"low": 2500.0, "moderate": 3500.0, "high": 2000.0},
        "median_household_income": 52000.0,
        "annual_kwh_per_household": 9000.0,
        "annual_therms_per_household": 700.0,
        "program_participation_rate": 0.2,
    }
    fields.update(overrides)
    record = LocaleRecord(**fields)
    record.validate()
    return record


def random_record(rng: random.Random, locale_id: str) -> LocaleRecord:
    pop = rng.uniform(500, 60000)
    white = rng.uniform(0, pop)
    black = rng.uniform(0, pop - white)
    asian = rng.uniform(0, pop - white - black)
    other = pop - white - black - asian
    owner = rng.uniform(1, 20000)
    renter = rng.uniform(1, 20000)
    return LocaleRecord(
        locale_id=locale_id,
        name=locale_id,
        race_counts={"white": white, "black": black, "asian": asian, "other": other},
        hispanic_count=rng.uniform(0, pop),
        total_population=pop,
        owner_occupied=owner,
        renter_occupied=renter,
        year_built_counts={b: rng.uniform(1, 9000) for b in YEAR_BUILT_BINS},
        income_bin_counts={b: rng.uniform(1, 9000) for b in INCOME_BINS},
        median_household_income=rng.uniform(15000, 250000),
        annual_kwh_per_household=rng.uniform(0, 25000),
        annual_therms_per_household=rng.uniform(0, 2500),
        program_participation_rate=rng.random(),
    )


def random_snapshot(rng: random.Random, n_locales: int | None = None) -> Snapshot:
    n = n_locales if n_locales is not None else rng.randint(1, 12)
    ids = rng.sample([f"{z:05d}" for z in range(7001, 9000)], n)
    records = tuple(random_record(rng, lid) for lid in sorted(ids))
    rates = RateSchedule(
        electricity_rate=rng.uniform(0.05, 0.45),
        heating_rate=rng.uniform(0.5, 2.5),
        state_average_burden_pct=rng.uniform(1.0, 12.0),
    )
    return Snapshot(
        records=records,
        rates=rates,
        created_at="2026-02-01T00:00:00+00:00",
        source_note="randomized",
    )


@pytest.fixture
def record_factory():
    return build_record


@pytest.fixture
def snapshot_factory():
    return random_snapshot
