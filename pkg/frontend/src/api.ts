/**
 * Typed client for the analytics JSON API. Every number the portal shows
 * comes from these payloads; the UI only rounds for display.
 */

export interface BurdenReport {
  locale_id: string;
  energy_burden_pct: number;
  state_average_pct: number;
  status: "Overburdened" | "BelowStateAverage";
  message: string;
  tips?: string[];
}

export interface ImportanceEntry {
  feature: string;
  weight: number;
}

export interface PccMatrix {
  row_labels: string[];
  col_labels: string[];
  values: (number | null)[][];
}

export interface HealthStatus {
  status: string;
  locales: number;
  snapshot_created_at: string;
}

/** Non-2xx response; carries the status code and the parsed error payload. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly payload: { error?: string; [key: string]: unknown } | null,
  ) {
    super(`API error ${status}${payload?.error ? `: ${payload.error}` : ""}`);
    this.name = "ApiError";
  }
}

/** The request never reached the server (offline, refused); retryable. */
export class NetworkError extends Error {
  constructor(cause: unknown) {
    super(`network failure: ${cause instanceof Error ? cause.message : String(cause)}`);
    this.name = "NetworkError";
  }
}

async function getJson<T>(url: string): Promise<T> {
  let response: Response;
  try {
    response = await fetch(url);
  } catch (cause) {
    throw new NetworkError(cause);
  }
  if (!response.ok) {
    const payload = await response.json().catch(() => null);
    throw new ApiError(response.status, payload);
  }
  return (await response.json()) as T;
}

export function fetchBurden(zip: string): Promise<BurdenReport> {
  return getJson(`/api/burden?zip=${encodeURIComponent(zip)}`);
}

export function fetchImportance(): Promise<ImportanceEntry[]> {
  return getJson("/api/feature-importance");
}

export function fetchPcc(groupA: string[], groupB: string[]): Promise<PccMatrix> {
  const a = encodeURIComponent(groupA.join(","));
  const b = encodeURIComponent(groupB.join(","));
  return getJson(`/api/pcc?group_a=${a}&group_b=${b}`);
}

export function fetchHealth(): Promise<HealthStatus> {
  return getJson("/api/health");
}
