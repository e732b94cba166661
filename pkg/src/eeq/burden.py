"""Household energy burden: percent of median income spent on energy.

The burden for a locale is ``(kwh * rate_kwh + therms * rate_therm) / income * 100``.
A locale whose burden strictly exceeds the configured state average is flagged
overburdened and gets the advice catalog attached; a burden exactly equal to the
state average counts as below it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional

from .errors import NonPositiveIncomeError, SnapshotIntegrityError, UnknownLocaleError

if TYPE_CHECKING:  # snapshot type lives in ingest; avoid a runtime import cycle
    from .ingest import Snapshot

#: Fallback threshold (percent of income) when an operator configures nothing.
#: It is a setting, not part of the burden arithmetic.
DEFAULT_STATE_AVERAGE_PCT = 6.0

OVERBURDENED_MESSAGE = "Overburdened"
BELOW_AVERAGE_MESSAGE = "Below State Average"

_TIPS: tuple[str, ...] = (
    "Schedule a free or low-cost home energy audit to find the biggest savings first.",
    "Seal air leaks around doors, windows, and attic hatches, and add insulation where the audit recommends it.",
    "Set thermostats back 7-10 degrees while asleep or away, or install a programmable thermostat.",
    "Replace burned-out bulbs with LEDs and choose ENERGY STAR models when appliances come due.",
    "Service heating equipment yearly and change furnace filters so it runs at rated efficiency.",
    "Apply to your state and utility efficiency programs; income-qualified weatherization help is often free.",
    "Ask your utility about budget billing or time-of-use rates that fit your household's schedule.",
)


class BurdenStatus(enum.Enum):
    OVERBURDENED = "Overburdened"
    BELOW_STATE_AVERAGE = "BelowStateAverage"


@dataclass(frozen=True)
class RateSchedule:
    """Utility prices plus the state-average burden threshold.

    electricity_rate is USD per kWh, heating_rate is USD per therm, and
    state_average_burden_pct is a percentage (e.g. 6.0 means 6%).
    """

    electricity_rate: float
    heating_rate: float
    state_average_burden_pct: float = DEFAULT_STATE_AVERAGE_PCT

    def validate(self) -> None:
        for name in ("electricity_rate", "heating_rate", "state_average_burden_pct"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise SnapshotIntegrityError(f"rate schedule field {name} must be numeric")
            if not value >= 0:
                raise SnapshotIntegrityError(
                    f"rate schedule field {name} must be >= 0, got {value}"
                )

    @classmethod
    def from_dict(cls, data: dict) -> "RateSchedule":
        try:
            schedule = cls(
                electricity_rate=data["electricity_rate"],
                heating_rate=data["heating_rate"],
                state_average_burden_pct=data.get(
                    "state_average_burden_pct", DEFAULT_STATE_AVERAGE_PCT
                ),
            )
        except (KeyError, TypeError) as exc:
            raise SnapshotIntegrityError(f"malformed rate schedule: {exc}") from exc
        schedule.validate()
        return schedule

    def as_dict(self) -> dict:
        return {
            "electricity_rate": self.electricity_rate,
            "heating_rate": self.heating_rate,
            "state_average_burden_pct": self.state_average_burden_pct,
        }


@dataclass(frozen=True)
class BurdenReport:
    """Outcome of evaluating one locale against the state average."""

    locale_id: str
    energy_burden_pct: float
    state_average_pct: float
    status: BurdenStatus
    message: str
    tips: Optional[tuple[str, ...]] = field(default=None)

    def as_dict(self) -> dict:
        payload = {
            "locale_id": self.locale_id,
            "energy_burden_pct": self.energy_burden_pct,
            "state_average_pct": self.state_average_pct,
            "status": self.status.value,
            "message": self.message,
        }
        if self.tips is not None:
            payload["tips"] = list(self.tips)
        return payload


def compute_energy_burden(
    annual_kwh: float,
    electricity_rate: float,
    annual_therms: float,
    heating_rate: float,
    median_income: float,
) -> float:
    """Return the energy burden as a percentage of median household income.

    Full floating precision, no rounding; presentation layers round for
    display. Raises NonPositiveIncomeError when median_income <= 0.
    """
    if median_income <= 0:
        raise NonPositiveIncomeError(median_income)
    return (annual_kwh * electricity_rate + annual_therms * heating_rate) / median_income * 100


def tips_catalog() -> list[str]:
    """Fixed, ordered catalog of advice for overburdened households."""
    return list(_TIPS)


def evaluate_zip(
    locale_id: str,
    snapshot: "Snapshot",
) -> BurdenReport:
    """Evaluate one locale's energy burden against the snapshot's state average.

    Looks up the locale's consumption and income, prices it with the
    snapshot's rate schedule, and classifies the result. The comparison is
    strict: a burden exactly at the state average is below it.
    """
    record = snapshot.find(locale_id)
    if record is None:
        raise UnknownLocaleError(locale_id)
    rates = snapshot.rates
    burden_pct = compute_energy_burden(
        record.annual_kwh_per_household,
        rates.electricity_rate,
        record.annual_therms_per_household,
        rates.heating_rate,
        record.median_household_income,
    )
    state_average = rates.state_average_burden_pct
    if burden_pct > state_average:
        return BurdenReport(
            locale_id=locale_id,
            energy_burden_pct=burden_pct,
            state_average_pct=state_average,
            status=BurdenStatus.OVERBURDENED,
            message=OVERBURDENED_MESSAGE,
            tips=_TIPS,
        )
    return BurdenReport(
        locale_id=locale_id,
        energy_burden_pct=burden_pct,
        state_average_pct=state_average,
        status=BurdenStatus.BELOW_STATE_AVERAGE,
        message=BELOW_AVERAGE_MESSAGE,
        tips=None,
    )
