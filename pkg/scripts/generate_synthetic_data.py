#!/usr/bin/env python3
"""Generate the bundled synthetic dataset under data/synthetic/.

600 synthetic zip-level locales driven by two latent factors: household
affluence (u) and housing modernity (m). Shares are linear in the latents
plus independent noise, so each declared pair below has a known design
correlation; electricity use is a planted function of the realized renter
and Asian population shares plus small noise, so those two features carry
essentially all of the signal a consumption model can find.

Planted correlations (design targets for the realized share columns):

    white_share      x owner_share       +0.95
    black_share      x renter_share      +0.70
    hispanic_share   x renter_share      +0.90
    low_income_share x renter_share      +0.72
    asian_share      x b2000_plus_share  +0.50

Planted target:

    kwh = 11500 - 5200 * renter_share + 7800 * asian_share + N(0, 120)

The output CSVs are committed to the repository; regenerating with the
frozen seed reproduces them byte-for-byte.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

SEED = 20260415
N_LOCALES = 600
OUT_DIR = Path(__file__).resolve().parents[1] / "data" / "synthetic"

PLANTED_CORRELATIONS = {
    ("white_share", "owner_share"): 0.95,
    ("black_share", "renter_share"): 0.70,
    ("hispanic_share", "renter_share"): 0.90,
    ("low_income_share", "renter_share"): 0.72,
    ("asian_share", "b2000_plus_share"): 0.50,
}

KWH_BASE = 11500.0
KWH_RENTER_SLOPE = -5200.0
KWH_ASIAN_SLOPE = 7800.0
KWH_NOISE_SD = 120.0

RATES = {
    "electricity_rate": 0.172,
    "heating_rate": 1.38,
    "state_average_burden_pct": 6.0,
}


def mix(primary: np.ndarray, rho: float, noise: np.ndarray) -> np.ndarray:
    """Unit-variance combination with correlation rho against primary."""
    return rho * primary + np.sqrt(1.0 - rho * rho) * noise


def generate(rng: np.random.Generator) -> list[dict]:
    zips = sorted(rng.choice(np.arange(7001, 9000), size=N_LOCALES, replace=False))
    u = rng.standard_normal(N_LOCALES)  # affluence
    m = rng.standard_normal(N_LOCALES)  # housing modernity
    noise = {key: rng.standard_normal(N_LOCALES) for key in
             ("white", "black", "asian", "hispanic", "low", "high", "pre1960",
              "mid_frac", "income", "participation", "kwh", "therms")}

    owner_share = np.clip(0.55 + 0.16 * u, 0.05, 0.95)
    white_share = np.clip(0.45 + 0.11 * mix(u, 0.95, noise["white"]), 0.02, 0.90)
    black_share = np.clip(0.15 + 0.04 * mix(-u, 0.70, noise["black"]), 0.01, 0.60)
    asian_share = np.clip(0.10 + 0.03 * mix(m, 0.50, noise["asian"]), 0.005, 0.50)
    hispanic_share = np.clip(0.22 + 0.08 * mix(-u, 0.90, noise["hispanic"]), 0.01, 0.80)

    low_share = np.clip(0.30 + 0.08 * mix(-u, 0.72, noise["low"]), 0.02, 0.90)
    high_share = np.clip(0.25 + 0.08 * mix(u, 0.80, noise["high"]), 0.02, 0.90)

    new_share = np.clip(0.22 + 0.07 * m, 0.02, 0.60)
    pre1960_share = np.clip(0.30 - 0.08 * m + 0.03 * noise["pre1960"], 0.02, 0.80)
    mid_fraction = np.clip(0.55 + 0.06 * noise["mid_frac"], 0.10, 0.90)

    income = np.round(58000.0 * np.exp(0.32 * u + 0.10 * noise["income"]))
    population = np.round(np.exp(rng.normal(np.log(14000.0), 0.55, N_LOCALES)))
    population = np.clip(population, 1200, 90000)
    persons_per_household = rng.uniform(2.3, 2.9, N_LOCALES)
    households = np.round(population / persons_per_household)
    stock = np.round(households * rng.uniform(1.02, 1.10, N_LOCALES))
    participation = np.clip(0.08 + 0.04 * u + 0.02 * noise["participation"], 0.005, 0.60)

    records = []
    for i in range(N_LOCALES):
        pop = float(population[i])
        hh = float(households[i])
        units = float(stock[i])

        owner = float(np.round(hh * owner_share[i]))
        renter = hh - owner
        assert owner >= 1 and renter >= 1

        white = float(np.round(pop * white_share[i]))
        black = float(np.round(pop * black_share[i]))
        asian = float(np.round(pop * asian_share[i]))
        other = pop - white - black - asian
        assert other >= 0
        hispanic = float(np.round(pop * hispanic_share[i]))

        new_units = float(np.round(units * new_share[i]))
        pre1960 = float(np.round(units * pre1960_share[i]))
        mid_units = units - new_units - pre1960
        assert mid_units >= 0
        mid_a = float(np.round(mid_units * mid_fraction[i]))
        mid_b = mid_units - mid_a

        low = float(np.round(hh * low_share[i]))
        high = float(np.round(hh * high_share[i]))
        moderate = hh - low - high
        assert moderate >= 1

        renter_realized = renter / hh
        asian_realized = asian / pop
        kwh = (
            KWH_BASE
            + KWH_RENTER_SLOPE * renter_realized
            + KWH_ASIAN_SLOPE * asian_realized
            + KWH_NOISE_SD * float(noise["kwh"][i])
        )
        pre1960_realized = pre1960 / units
        new_realized = new_units / units
        therms = (
            620.0
            + 240.0 * pre1960_realized
            - 110.0 * new_realized
            + 25.0 * float(noise["therms"][i])
        )

        records.append({
            "locale_id": f"{int(zips[i]):05d}",
            "white": int(white), "black": int(black), "asian": int(asian),
            "other": int(other), "total_population": int(pop),
            "hispanic": int(hispanic),
            "owner_occupied": int(owner), "renter_occupied": int(renter),
            "pre1960": int(pre1960), "b1960_1979": int(mid_a),
            "b1980_1999": int(mid_b), "b2000_plus": int(new_units),
            "low": int(low), "moderate": int(moderate), "high": int(high),
            "median_household_income": int(income[i]),
            "annual_kwh_per_household": round(float(kwh), 1),
            "annual_therms_per_household": round(max(float(therms), 0.0), 1),
            "participation_rate": round(float(participation[i]), 4),
        })
    return records


TABLES = {
    "race.csv": ["white", "black", "asian", "other", "total_population"],
    "hispanic.csv": ["hispanic"],
    "tenure.csv": ["owner_occupied", "renter_occupied"],
    "year_built.csv": ["pre1960", "b1960_1979", "b1980_1999", "b2000_plus"],
    "income_bins.csv": ["low", "moderate", "high"],
    "income_quintiles.csv": ["median_household_income"],
    "utility_energy.csv": ["annual_kwh_per_household", "annual_therms_per_household"],
    "participation.csv": ["participation_rate"],
}


def write_tables(records: list[dict], out_dir: Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    for filename, columns in TABLES.items():
        with open(out_dir / filename, "w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["locale_id"] + columns)
            for record in records:
                writer.writerow([record["locale_id"]] + [record[c] for c in columns])
    with open(out_dir / "rates.json", "w", encoding="utf-8") as handle:
        json.dump(RATES, handle, indent=2)
        handle.write("\n")


def main() -> None:
    rng = np.random.default_rng(SEED)
    records = generate(rng)
    write_tables(records, OUT_DIR)
    print(f"wrote {len(records)} locales to {OUT_DIR}")


if __name__ == "__main__":
    main()
