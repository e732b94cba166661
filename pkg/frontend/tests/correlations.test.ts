import { afterEach, describe, expect, it, vi } from "vitest";
import { createCorrelationsView } from "../src/views/correlations.js";
import { flush, jsonResponse, mockFetch } from "./helpers.js";

const MATRIX = {
  row_labels: ["white_share", "black_share"],
  col_labels: ["renter_share", "owner_share"],
  values: [
    [-0.9492507817103243, 0.9492507817103243],
    [null, 0.6949385300626926],
  ],
};

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("correlations view", () => {
  it("renders heatmap cells matching the payload after display rounding", async () => {
    mockFetch(() => jsonResponse(200, MATRIX));
    const { element, load } = createCorrelationsView();
    document.body.append(element);
    await load();
    await flush();

    const cells = [...element.querySelectorAll(".cell")];
    expect(cells.map((cell) => cell.textContent)).toEqual(["-0.95", "0.95", "n/a", "0.69"]);
    // tooltips carry the exact coefficient, not the rounded display value
    expect(cells[0]!.getAttribute("title")).toBe("-0.9492507817103243");
    expect(cells[1]!.getAttribute("title")).toBe("0.9492507817103243");
  });

  it("marks undefined entries n/a, grey, and outside the color scale", async () => {
    mockFetch(() => jsonResponse(200, MATRIX));
    const { element, load } = createCorrelationsView();
    await load();
    const undefinedCell = element.querySelector<HTMLElement>(".cell-undefined")!;
    expect(undefinedCell.textContent).toBe("n/a");
    expect(undefinedCell.style.backgroundColor).toBe("");
    const definedCell = element.querySelector<HTMLElement>(".cell:not(.cell-undefined)")!;
    expect(definedCell.style.backgroundColor).not.toBe("");
  });

  it("requests the selected feature groups", async () => {
    const fetchMock = mockFetch(() => jsonResponse(200, MATRIX));
    const { element, load } = createCorrelationsView();
    await load();
    expect(fetchMock).toHaveBeenLastCalledWith(
      "/api/pcc?group_a=white_share%2Cblack_share%2Casian_share%2Cother_share%2Chispanic_share&group_b=renter_share%2Cowner_share",
    );

    const selects = element.querySelectorAll("select");
    selects[1]!.value = "income";
    selects[1]!.dispatchEvent(new Event("change"));
    await flush();
    expect(String(fetchMock.mock.calls.at(-1)![0])).toContain(
      "group_b=low_income_share%2Cmoderate_income_share%2Chigh_income_share",
    );
  });

  it("shows an error banner on a 400 response", async () => {
    mockFetch(() => jsonResponse(400, { error: "unknown_feature", feature: "bogus" }));
    const { element, load } = createCorrelationsView();
    await load();
    const banner = element.querySelector(".error-banner")!;
    expect(banner.textContent).toContain("bogus");
    expect(element.querySelector(".heatmap")).toBeNull();
  });

  it("symmetric request renders a unit diagonal", async () => {
    const symmetric = {
      row_labels: ["renter_share", "owner_share"],
      col_labels: ["renter_share", "owner_share"],
      values: [
        [1.0, -1.0],
        [-1.0, 1.0],
      ],
    };
    mockFetch(() => jsonResponse(200, symmetric));
    const { element, load } = createCorrelationsView();
    await load();
    const cells = [...element.querySelectorAll(".cell")].map((cell) => cell.textContent);
    expect(cells).toEqual(["1.00", "-1.00", "-1.00", "1.00"]);
  });
});
