"""Exception types raised across the package.

Every error carries enough context (column, locale id, feature name) for a
caller to report the offending input without re-parsing anything.
"""

from __future__ import annotations


class EeqError(Exception):
    """Base class for all package errors."""


# --- table parsing / joining ---

class TableFormatError(EeqError):
    """Input is not a readable CSV table (bad encoding, blank locale id)."""


class EmptyTableError(EeqError):
    """Table has a header but no data rows, or no content at all."""


class MissingColumnError(EeqError):
    def __init__(self, column: str, kind: str):
        self.column = column
        self.kind = kind
        super().__init__(f"{kind} table is missing required column {column!r}")


class DuplicateLocaleError(EeqError):
    def __init__(self, locale_id: str):
        self.locale_id = locale_id
        super().__init__(f"duplicate locale_id {locale_id!r}")


class NonNumericCellError(EeqError):
    def __init__(self, locale_id: str, column: str, value: str):
        self.locale_id = locale_id
        self.column = column
        self.value = value
        super().__init__(
            f"non-numeric cell at locale {locale_id!r}, column {column!r}: {value!r}"
        )


class NegativeValueError(EeqError):
    def __init__(self, locale_id: str, column: str, value: float):
        self.locale_id = locale_id
        self.column = column
        self.value = value
        super().__init__(
            f"negative value at locale {locale_id!r}, column {column!r}: {value}"
        )


class MissingTableKindError(EeqError):
    def __init__(self, kind: str):
        self.kind = kind
        super().__init__(f"no table provided for kind {kind}")


class NoCommonLocalesError(EeqError):
    def __init__(self) -> None:
        super().__init__("tables share no common locale_id")


# --- snapshot persistence ---

class FormatVersionError(EeqError):
    """File is not a snapshot document, or its format_version is unsupported."""


class SnapshotIntegrityError(EeqError):
    """A locale record or rate schedule violates a domain invariant."""


# --- burden ---

class NonPositiveIncomeError(EeqError):
    def __init__(self, income: float):
        self.income = income
        super().__init__(f"median household income must be > 0, got {income}")


class UnknownLocaleError(EeqError):
    def __init__(self, locale_id: str):
        self.locale_id = locale_id
        super().__init__(f"locale {locale_id!r} not present in snapshot")


# --- analytics ---

class InsufficientDataError(EeqError):
    """Not enough rows to fit a model."""


class DimensionMismatchError(EeqError):
    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"expected a row of length {expected}, got {got}")


class LengthMismatchError(EeqError):
    def __init__(self, len_a: int, len_b: int):
        self.len_a = len_a
        self.len_b = len_b
        super().__init__(f"vector lengths differ: {len_a} vs {len_b}")


class ZeroVarianceTargetError(EeqError):
    """The actual/target vector is constant, so the statistic is undefined."""


class UnknownFeatureError(EeqError):
    def __init__(self, feature: str):
        self.feature = feature
        super().__init__(f"unknown feature {feature!r}")
