import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";
import { createCalculatorView } from "../src/views/calculator.js";
import { BURDEN_07043, BURDEN_07928, flush, jsonResponse, mockFetch } from "./helpers.js";

function mount(): HTMLElement {
  document.body.innerHTML = "";
  const view = createCalculatorView();
  document.body.append(view);
  return view;
}

function submitZip(view: HTMLElement, zip: string): void {
  const input = view.querySelector<HTMLInputElement>(".zip-input")!;
  input.value = zip;
  view.querySelector("form")!.dispatchEvent(new Event("submit"));
}

function visible(element: Element | null): boolean {
  return element !== null && !element.hasAttribute("hidden");
}

afterEach(() => {
  vi.unstubAllGlobals();
});

beforeEach(() => {
  document.body.innerHTML = "";
});

describe("burden calculator view", () => {
  it("renders an overburdened report with the API's EB to 2 decimals and tips", async () => {
    mockFetch(() => jsonResponse(200, BURDEN_07043));
    const view = mount();
    submitZip(view, "07043");
    await flush();

    expect(view.querySelector(".burden-value")!.textContent).toBe("10.00%");
    const badge = view.querySelector(".badge")!;
    expect(badge.textContent).toBe("Overburdened");
    expect(badge.classList.contains("badge-over")).toBe(true);
    const tips = view.querySelectorAll(".tips li");
    expect(tips.length).toBe(BURDEN_07043.tips.length);
    expect(tips[0]!.textContent).toBe(BURDEN_07043.tips[0]);
    expect(visible(view.querySelector(".result"))).toBe(true);
  });

  it("renders below-average reports without any tips section", async () => {
    mockFetch(() => jsonResponse(200, BURDEN_07928));
    const view = mount();
    submitZip(view, "07928");
    await flush();

    expect(view.querySelector(".burden-value")!.textContent).toBe("3.53%");
    const badge = view.querySelector(".badge")!;
    expect(badge.textContent).toBe("Below State Average");
    expect(badge.classList.contains("badge-below")).toBe(true);
    expect(view.querySelector(".tips")).toBeNull();
  });

  it("never issues a network request for a malformed zip", async () => {
    const fetchMock = mockFetch(() => jsonResponse(200, BURDEN_07043));
    const view = mount();
    for (const bad of ["7043", "070433", "07 43", "", "07-43"]) {
      submitZip(view, bad);
      await flush();
      expect(visible(view.querySelector(".inline-error"))).toBe(true);
      expect(view.querySelector(".burden-value")).toBeNull();
    }
    expect(fetchMock).not.toHaveBeenCalled();
  });

  it("maps 404 to a zip-not-found message", async () => {
    mockFetch(() => jsonResponse(404, { error: "unknown_locale" }));
    const view = mount();
    submitZip(view, "00000");
    await flush();
    const inline = view.querySelector(".inline-error")!;
    expect(visible(inline)).toBe(true);
    expect(inline.textContent).toBe("Zip not found.");
  });

  it("maps 400 to an inline validation message", async () => {
    mockFetch(() => jsonResponse(400, { error: "invalid_zip" }));
    const view = mount();
    submitZip(view, "0a0a0");
    await flush();
    expect(visible(view.querySelector(".inline-error"))).toBe(true);
  });

  it("shows a retryable banner on network failure and recovers on retry", async () => {
    let failing = true;
    const fetchMock = vi.fn(() =>
      failing
        ? Promise.reject(new TypeError("Failed to fetch"))
        : Promise.resolve(jsonResponse(200, BURDEN_07043)),
    );
    vi.stubGlobal("fetch", fetchMock);

    const view = mount();
    submitZip(view, "07043");
    await flush();
    const banner = view.querySelector(".error-banner")!;
    expect(visible(banner)).toBe(true);

    failing = false;
    banner.querySelector("button")!.dispatchEvent(new Event("click"));
    await flush();
    expect(visible(view.querySelector(".result"))).toBe(true);
    expect(view.querySelector(".burden-value")!.textContent).toBe("10.00%");
    expect(fetchMock).toHaveBeenCalledTimes(2);
  });

  it("discards a stale response superseded by a newer submission", async () => {
    let releaseFirst: (response: Response) => void = () => {};
    const first = new Promise<Response>((resolve) => {
      releaseFirst = resolve;
    });
    const fetchMock = vi
      .fn()
      .mockImplementationOnce(() => first)
      .mockImplementationOnce(() => Promise.resolve(jsonResponse(200, BURDEN_07928)));
    vi.stubGlobal("fetch", fetchMock);

    const view = mount();
    submitZip(view, "07043");
    submitZip(view, "07928");
    await flush();
    expect(view.querySelector(".burden-value")!.textContent).toBe("3.53%");

    releaseFirst(jsonResponse(200, BURDEN_07043));
    await flush();
    // the older 07043 response must not clobber the newer 07928 result
    expect(view.querySelector(".burden-value")!.textContent).toBe("3.53%");
  });
});
