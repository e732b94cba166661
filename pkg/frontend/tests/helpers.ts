import { vi } from "vitest";

/** Minimal Response stand-in covering what the client reads. */
export function jsonResponse(status: number, payload: unknown): Response {
  return {
    ok: status >= 200 && status < 300,
    status,
    json: async () => payload,
  } as unknown as Response;
}

/** Install a fetch mock; returns it for call inspection. */
export function mockFetch(
  handler: (url: string) => Response | Promise<Response>,
): ReturnType<typeof vi.fn> {
  const mock = vi.fn((input: RequestInfo | URL) => Promise.resolve(handler(String(input))));
  vi.stubGlobal("fetch", mock);
  return mock;
}

/** Let queued promise callbacks run. */
export async function flush(): Promise<void> {
  await new Promise((resolve) => setTimeout(resolve, 0));
  await new Promise((resolve) => setTimeout(resolve, 0));
}

export const BURDEN_07043 = {
  locale_id: "07043",
  energy_burden_pct: 10.0,
  state_average_pct: 6.0,
  status: "Overburdened",
  message: "Overburdened",
  tips: [
    "Schedule a free or low-cost home energy audit to find the biggest savings first.",
    "Seal air leaks around doors, windows, and attic hatches, and add insulation where the audit recommends it.",
    "Apply to your state and utility efficiency programs; income-qualified weatherization help is often free.",
  ],
};

export const BURDEN_07928 = {
  locale_id: "07928",
  energy_burden_pct: 3.5333333333333337,
  state_average_pct: 6.0,
  status: "BelowStateAverage",
  message: "Below State Average",
};
