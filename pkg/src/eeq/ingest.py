"""Parse canonical locale tables, join them, and persist snapshots.

The canonical inputs are eight simplified CSV tables keyed by ``locale_id``
(a 5-character zip code or county GEOID, zero padding preserved, compared
case-sensitively). Parsing is strict: a byte stream either becomes a fully
validated :class:`RawTable` or raises a typed error naming the offending
column or locale. Joining is an inner join on locale_id; locales absent from
any table are dropped and counted, never imputed.

A :class:`Snapshot` is the immutable join of all eight tables plus a rate
schedule. It persists as a versioned JSON document (``format_version: 1``)
whose numbers round-trip bit-exactly.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import BinaryIO, Iterable, Optional, Union

from .burden import RateSchedule
from .errors import (
    DuplicateLocaleError,
    EmptyTableError,
    FormatVersionError,
    MissingColumnError,
    MissingTableKindError,
    NegativeValueError,
    NoCommonLocalesError,
    NonNumericCellError,
    SnapshotIntegrityError,
    TableFormatError,
)

SNAPSHOT_FORMAT_VERSION = 1

LOCALE_ID_COLUMN = "locale_id"

YEAR_BUILT_BINS = ("pre1960", "b1960_1979", "b1980_1999", "b2000_plus")
INCOME_BINS = ("low", "moderate", "high")
RACE_GROUPS = ("white", "black", "asian", "other")


class TableKind(enum.Enum):
    RACE = "race"
    HISPANIC_ORIGIN = "hispanic"
    YEAR_BUILT = "year_built"
    INCOME_BINS = "income_bins"
    INCOME_QUINTILES = "income_quintiles"
    TENURE = "tenure"
    UTILITY_ENERGY = "utility_energy"
    PROGRAM_PARTICIPATION = "participation"


#: Required data columns per table kind (locale_id is implied everywhere).
REQUIRED_COLUMNS: dict[TableKind, tuple[str, ...]] = {
    TableKind.RACE: ("white", "black", "asian", "other", "total_population"),
    TableKind.HISPANIC_ORIGIN: ("hispanic",),
    TableKind.TENURE: ("owner_occupied", "renter_occupied"),
    TableKind.YEAR_BUILT: YEAR_BUILT_BINS,
    TableKind.INCOME_BINS: INCOME_BINS,
    TableKind.INCOME_QUINTILES: ("median_household_income",),
    TableKind.UTILITY_ENERGY: ("annual_kwh_per_household", "annual_therms_per_household"),
    TableKind.PROGRAM_PARTICIPATION: ("participation_rate",),
}

#: Canonical file names inside a data directory, one per kind.
TABLE_FILENAMES: dict[TableKind, str] = {
    TableKind.RACE: "race.csv",
    TableKind.HISPANIC_ORIGIN: "hispanic.csv",
    TableKind.TENURE: "tenure.csv",
    TableKind.YEAR_BUILT: "year_built.csv",
    TableKind.INCOME_BINS: "income_bins.csv",
    TableKind.INCOME_QUINTILES: "income_quintiles.csv",
    TableKind.UTILITY_ENERGY: "utility_energy.csv",
    TableKind.PROGRAM_PARTICIPATION: "participation.csv",
}


@dataclass(frozen=True)
class RawTable:
    """One parsed table: ``rows[locale_id][column] -> value``.

    Rows hold exactly the required columns for the kind; every value is a
    finite, non-negative float.
    """

    kind: TableKind
    rows: dict[str, dict[str, float]]


@dataclass(frozen=True)
class LocaleRecord:
    """One locale's demographics, housing, income, and per-household energy use."""

    locale_id: str
    name: str
    race_counts: dict[str, float]
    hispanic_count: float
    total_population: float
    owner_occupied: float
    renter_occupied: float
    year_built_counts: dict[str, float]
    income_bin_counts: dict[str, float]
    median_household_income: float
    annual_kwh_per_household: float
    annual_therms_per_household: float
    program_participation_rate: float

    def validate(self) -> None:
        """Check every domain invariant; raise SnapshotIntegrityError on the first break.

        Positivity of the share denominators (population, occupied units,
        housing-stock and income-bin totals) is enforced here so feature
        construction can divide without guards.
        """
        lid = self.locale_id
        if not lid:
            raise SnapshotIntegrityError("locale_id must be a non-empty string")
        numeric_fields = {
            "hispanic_count": self.hispanic_count,
            "total_population": self.total_population,
            "owner_occupied": self.owner_occupied,
            "renter_occupied": self.renter_occupied,
            "median_household_income": self.median_household_income,
            "annual_kwh_per_household": self.annual_kwh_per_household,
            "annual_therms_per_household": self.annual_therms_per_household,
            "program_participation_rate": self.program_participation_rate,
        }
        for name, value in numeric_fields.items():
            _require_finite_number(lid, name, value)
            if value < 0:
                raise SnapshotIntegrityError(f"locale {lid!r}: {name} must be >= 0, got {value}")
        if set(self.race_counts) != set(RACE_GROUPS):
            raise SnapshotIntegrityError(f"locale {lid!r}: race_counts must have keys {RACE_GROUPS}")
        if set(self.year_built_counts) != set(YEAR_BUILT_BINS):
            raise SnapshotIntegrityError(
                f"locale {lid!r}: year_built_counts must have keys {YEAR_BUILT_BINS}"
            )
        if set(self.income_bin_counts) != set(INCOME_BINS):
            raise SnapshotIntegrityError(f"locale {lid!r}: income_bin_counts must have keys {INCOME_BINS}")
        for group, count in (
            list(self.race_counts.items())
            + list(self.year_built_counts.items())
            + list(self.income_bin_counts.items())
        ):
            _require_finite_number(lid, group, count)
            if count < 0:
                raise SnapshotIntegrityError(f"locale {lid!r}: count {group} must be >= 0, got {count}")
        if not self.total_population > 0:
            raise SnapshotIntegrityError(f"locale {lid!r}: total_population must be > 0")
        for group, count in self.race_counts.items():
            if count > self.total_population:
                raise SnapshotIntegrityError(
                    f"locale {lid!r}: race count {group}={count} exceeds total_population"
                )
        if not self.owner_occupied + self.renter_occupied > 0:
            raise SnapshotIntegrityError(f"locale {lid!r}: no occupied housing units")
        if not sum(self.year_built_counts.values()) > 0:
            raise SnapshotIntegrityError(f"locale {lid!r}: no housing units in year-built bins")
        if not sum(self.income_bin_counts.values()) > 0:
            raise SnapshotIntegrityError(f"locale {lid!r}: no households in income bins")
        if not self.median_household_income > 0:
            raise SnapshotIntegrityError(f"locale {lid!r}: median_household_income must be > 0")
        if not 0 <= self.program_participation_rate <= 1:
            raise SnapshotIntegrityError(
                f"locale {lid!r}: program_participation_rate must be in [0, 1]"
            )

    def as_dict(self) -> dict:
        return {
            "locale_id": self.locale_id,
            "name": self.name,
            "race_counts": dict(self.race_counts),
            "hispanic_count": self.hispanic_count,
            "total_population": self.total_population,
            "owner_occupied": self.owner_occupied,
            "renter_occupied": self.renter_occupied,
            "year_built_counts": dict(self.year_built_counts),
            "income_bin_counts": dict(self.income_bin_counts),
            "median_household_income": self.median_household_income,
            "annual_kwh_per_household": self.annual_kwh_per_household,
            "annual_therms_per_household": self.annual_therms_per_household,
            "program_participation_rate": self.program_participation_rate,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LocaleRecord":
        try:
            record = cls(
                locale_id=data["locale_id"],
                name=data["name"],
                race_counts=dict(data["race_counts"]),
                hispanic_count=data["hispanic_count"],
                total_population=data["total_population"],
                owner_occupied=data["owner_occupied"],
                renter_occupied=data["renter_occupied"],
                year_built_counts=dict(data["year_built_counts"]),
                income_bin_counts=dict(data["income_bin_counts"]),
                median_household_income=data["median_household_income"],
                annual_kwh_per_household=data["annual_kwh_per_household"],
                annual_therms_per_household=data["annual_therms_per_household"],
                program_participation_rate=data["program_participation_rate"],
            )
        except (KeyError, TypeError) as exc:
            raise SnapshotIntegrityError(f"malformed locale record: {exc}") from exc
        record.validate()
        return record


def _require_finite_number(locale_id: str, name: str, value: object) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SnapshotIntegrityError(f"locale {locale_id!r}: {name} must be numeric")
    if not math.isfinite(value):
        raise SnapshotIntegrityError(f"locale {locale_id!r}: {name} must be finite")


@dataclass(frozen=True)
class Snapshot:
    """Immutable, validated join of all eight tables plus rates and metadata."""

    records: tuple[LocaleRecord, ...]
    rates: RateSchedule
    created_at: str
    source_note: str = ""

    def __post_init__(self):
        if not self.records:
            raise SnapshotIntegrityError("snapshot must contain at least one locale record")
        ids = [r.locale_id for r in self.records]
        if ids != sorted(ids):
            raise SnapshotIntegrityError("snapshot records must be sorted by locale_id")
        if len(set(ids)) != len(ids):
            raise SnapshotIntegrityError("snapshot records must have unique locale_ids")

    def find(self, locale_id: str) -> Optional[LocaleRecord]:
        return self._index().get(locale_id)

    def _index(self) -> dict[str, LocaleRecord]:
        # Built lazily once; the dataclass is frozen so go through __dict__.
        cached = self.__dict__.get("_by_id")
        if cached is None:
            cached = {r.locale_id: r for r in self.records}
            self.__dict__["_by_id"] = cached
        return cached

    def with_state_average(self, state_average_pct: float) -> "Snapshot":
        """Copy of this snapshot with the stored state-average threshold replaced."""
        new_rates = replace(self.rates, state_average_burden_pct=state_average_pct)
        new_rates.validate()
        return replace(self, rates=new_rates)


@dataclass(frozen=True)
class JoinResult:
    records: tuple[LocaleRecord, ...]
    dropped: int


def parse_table(stream: Union[bytes, BinaryIO], kind: TableKind) -> RawTable:
    """Parse a UTF-8 CSV byte stream into a validated RawTable.

    Column order in the file is irrelevant; columns beyond the required set
    are ignored. Raises MissingColumnError, DuplicateLocaleError,
    NonNumericCellError, NegativeValueError, EmptyTableError, or
    TableFormatError.
    """
    raw = stream if isinstance(stream, bytes) else stream.read()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise TableFormatError(f"{kind.value} table is not valid UTF-8: {exc}") from exc

    reader = csv.DictReader(io.StringIO(text))
    header = reader.fieldnames
    if header is None:
        raise EmptyTableError(f"{kind.value} table is empty")

    required = REQUIRED_COLUMNS[kind]
    for column in (LOCALE_ID_COLUMN,) + tuple(required):
        if column not in header:
            raise MissingColumnError(column, kind.value)

    rows: dict[str, dict[str, float]] = {}
    for line in reader:
        locale_id = (line.get(LOCALE_ID_COLUMN) or "").strip()
        if not locale_id:
            raise TableFormatError(f"{kind.value} table has a row with an empty locale_id")
        if locale_id in rows:
            raise DuplicateLocaleError(locale_id)
        row: dict[str, float] = {}
        for column in required:
            cell = line.get(column)
            cell = cell.strip() if cell is not None else ""
            try:
                value = float(cell)
            except ValueError:
                raise NonNumericCellError(locale_id, column, cell) from None
            if not math.isfinite(value):
                raise NonNumericCellError(locale_id, column, cell)
            if value < 0:
                raise NegativeValueError(locale_id, column, value)
            row[column] = value
        rows[locale_id] = row
    if not rows:
        raise EmptyTableError(f"{kind.value} table has no data rows")
    return RawTable(kind=kind, rows=rows)


def join_tables(tables: Iterable[RawTable]) -> JoinResult:
    """Inner-join one table of each kind on locale_id.

    Locales missing from any table are dropped; the count of dropped locales
    (union minus intersection) is returned alongside the sorted records.
    """
    by_kind: dict[TableKind, RawTable] = {}
    for table in tables:
        if table.kind in by_kind:
            raise ValueError(f"more than one table of kind {table.kind}")
        by_kind[table.kind] = table
    for kind in TableKind:
        if kind not in by_kind:
            raise MissingTableKindError(kind.value)

    locale_sets = [set(t.rows) for t in by_kind.values()]
    common = set.intersection(*locale_sets)
    union = set.union(*locale_sets)
    if not common:
        raise NoCommonLocalesError()

    records = []
    for locale_id in sorted(common):
        race = by_kind[TableKind.RACE].rows[locale_id]
        tenure = by_kind[TableKind.TENURE].rows[locale_id]
        energy = by_kind[TableKind.UTILITY_ENERGY].rows[locale_id]
        record = LocaleRecord(
            locale_id=locale_id,
            name=locale_id,
            race_counts={g: race[g] for g in RACE_GROUPS},
            hispanic_count=by_kind[TableKind.HISPANIC_ORIGIN].rows[locale_id]["hispanic"],
            total_population=race["total_population"],
            owner_occupied=tenure["owner_occupied"],
            renter_occupied=tenure["renter_occupied"],
            year_built_counts=dict(by_kind[TableKind.YEAR_BUILT].rows[locale_id]),
            income_bin_counts=dict(by_kind[TableKind.INCOME_BINS].rows[locale_id]),
            median_household_income=by_kind[TableKind.INCOME_QUINTILES].rows[locale_id][
                "median_household_income"
            ],
            annual_kwh_per_household=energy["annual_kwh_per_household"],
            annual_therms_per_household=energy["annual_therms_per_household"],
            program_participation_rate=by_kind[TableKind.PROGRAM_PARTICIPATION].rows[locale_id][
                "participation_rate"
            ],
        )
        record.validate()
        records.append(record)
    return JoinResult(records=tuple(records), dropped=len(union) - len(common))


def read_tables_dir(data_dir: Union[str, Path]) -> list[RawTable]:
    """Parse the eight canonical CSV files from a directory."""
    data_dir = Path(data_dir)
    tables = []
    for kind, filename in TABLE_FILENAMES.items():
        path = data_dir / filename
        with open(path, "rb") as handle:
            tables.append(parse_table(handle, kind))
    return tables


def save_snapshot(snapshot: Snapshot, destination: Union[str, Path]) -> None:
    """Write a snapshot as versioned JSON with full-precision numbers."""
    document = {
        "format_version": SNAPSHOT_FORMAT_VERSION,
        "created_at": snapshot.created_at,
        "source_note": snapshot.source_note,
        "rates": snapshot.rates.as_dict(),
        "records": [record.as_dict() for record in snapshot.records],
    }
    with open(destination, "w", encoding="utf-8") as handle:
        json.dump(document, handle, indent=2)
        handle.write("\n")


def load_snapshot(source: Union[str, Path]) -> Snapshot:
    """Load and revalidate a snapshot written by :func:`save_snapshot`.

    Raises OSError for unreadable paths, FormatVersionError for files that
    are not version-1 snapshot documents, and SnapshotIntegrityError when
    any record or rate invariant is broken.
    """
    with open(source, "r", encoding="utf-8") as handle:
        try:
            document = json.load(handle)
        except json.JSONDecodeError as exc:
            raise FormatVersionError(f"{source}: not a snapshot document: {exc}") from exc
    if not isinstance(document, dict):
        raise FormatVersionError(f"{source}: not a snapshot document")
    version = document.get("format_version")
    if version != SNAPSHOT_FORMAT_VERSION:
        raise FormatVersionError(
            f"{source}: unsupported format_version {version!r} (expected {SNAPSHOT_FORMAT_VERSION})"
        )
    try:
        rates = RateSchedule.from_dict(document["rates"])
        records = tuple(LocaleRecord.from_dict(item) for item in document["records"])
        snapshot = Snapshot(
            records=records,
            rates=rates,
            created_at=document["created_at"],
            source_note=document.get("source_note", ""),
        )
    except KeyError as exc:
        raise FormatVersionError(f"{source}: snapshot document missing field {exc}") from exc
    return snapshot
