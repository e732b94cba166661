/** Display rounding only; underlying values stay full precision. */

export function formatBurdenPct(value: number): string {
  return `${value.toFixed(2)}%`;
}

export function formatWeightPct(weight: number): string {
  return `${(weight * 100).toFixed(2)}%`;
}

/** Correlation cell text: two decimals, or "n/a" for undefined entries. */
export function formatCorrelation(value: number | null): string {
  return value === null ? "n/a" : value.toFixed(2);
}
