import { afterEach, describe, expect, it, vi } from "vitest";
import { mountApp } from "../src/app.js";
import { BURDEN_07043, flush, jsonResponse, mockFetch } from "./helpers.js";

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("app shell", () => {
  it("lands on the calculator with three tabs", () => {
    mockFetch(() => jsonResponse(200, []));
    const container = document.createElement("div");
    mountApp(container);
    const tabs = [...container.querySelectorAll(".tab")].map((tab) => tab.textContent);
    expect(tabs).toEqual(["Calculator", "Importance", "Correlations"]);
    expect(container.querySelector(".calculator-view")).not.toBeNull();
    expect(container.querySelector(".importance-view")).toBeNull();
  });

  it("switching tabs activates the analytics views lazily", async () => {
    const fetchMock = mockFetch((url) =>
      url.startsWith("/api/feature-importance")
        ? jsonResponse(200, [{ feature: "renter_share", weight: 1.0 }])
        : jsonResponse(200, BURDEN_07043),
    );
    const container = document.createElement("div");
    document.body.append(container);
    mountApp(container);
    expect(fetchMock).not.toHaveBeenCalled();

    const tabs = container.querySelectorAll(".tab");
    tabs[1]!.dispatchEvent(new Event("click"));
    await flush();
    expect(container.querySelector(".importance-view")).not.toBeNull();
    expect(fetchMock).toHaveBeenCalledTimes(1);

    // returning to the tab does not refetch
    tabs[0]!.dispatchEvent(new Event("click"));
    tabs[1]!.dispatchEvent(new Event("click"));
    await flush();
    expect(fetchMock).toHaveBeenCalledTimes(1);
  });
});
