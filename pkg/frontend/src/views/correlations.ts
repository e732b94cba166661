/**
 * Correlation view: pick two fixed feature groups and render their Pearson
 * matrix as a heatmap. Cell color comes from a diverging scale spanning
 * [-1, 1]; undefined entries render as grey "n/a" cells outside the scale;
 * the tooltip carries the exact unrounded coefficient.
 */

import { ApiError, NetworkError, PccMatrix, fetchPcc } from "../api.js";
import { correlationColor, correlationTextColor } from "../color.js";
import { clear, el } from "../dom.js";
import { formatCorrelation } from "../format.js";
import { FEATURE_GROUPS, GROUP_NAMES } from "../groups.js";

function groupSelect(name: string, initial: string): HTMLSelectElement {
  const select = el("select", { className: "group-select", attrs: { name } });
  for (const groupName of GROUP_NAMES) {
    const option = el("option", { text: groupName, attrs: { value: groupName } });
    if (groupName === initial) option.setAttribute("selected", "");
    select.append(option);
  }
  return select;
}

export function createCorrelationsView(): { element: HTMLElement; load: () => Promise<void> } {
  const root = el("section", { className: "view correlations-view" });
  const heading = el("h2", { text: "How Features Move Together" });
  const selectA = groupSelect("group_a", "race");
  const selectB = groupSelect("group_b", "tenure");
  const controls = el("div", { className: "pcc-controls" }, [
    el("label", { text: "Rows: " }, [selectA]),
    el("label", { text: "Columns: " }, [selectB]),
  ]);
  const body = el("div", { className: "pcc-body" });
  root.append(heading, controls, body);

  let requestSeq = 0;

  function renderHeatmap(matrix: PccMatrix): void {
    clear(body);
    const table = el("table", { className: "heatmap" });
    const header = el("tr", {}, [el("th", { text: "" })]);
    for (const label of matrix.col_labels) {
      header.append(el("th", { text: label }));
    }
    table.append(header);
    matrix.values.forEach((row, i) => {
      const tr = el("tr", {}, [el("th", { text: matrix.row_labels[i] ?? "" })]);
      row.forEach((value) => {
        const cell = el("td", {
          className: value === null ? "cell cell-undefined" : "cell",
          text: formatCorrelation(value),
        });
        if (value === null) {
          cell.setAttribute("title", "undefined (a feature is constant)");
        } else {
          cell.setAttribute("title", String(value));
          cell.style.backgroundColor = correlationColor(value);
          cell.style.color = correlationTextColor(value);
        }
        tr.append(cell);
      });
      table.append(tr);
    });
    body.append(table);
    body.append(el("p", { className: "scale-note", text: "Color scale: -1 (blue) to +1 (red)." }));
  }

  function renderBanner(message: string): void {
    clear(body);
    const retry = el("button", { className: "retry", text: "Retry" });
    retry.addEventListener("click", () => void load());
    body.append(el("div", { className: "error-banner" }, [el("span", { text: message }), retry]));
  }

  async function load(): Promise<void> {
    const groupA = FEATURE_GROUPS[selectA.value];
    const groupB = FEATURE_GROUPS[selectB.value];
    if (!groupA || !groupB) {
      renderBanner("Unknown feature group selected.");
      return;
    }
    const seq = ++requestSeq;
    try {
      const matrix = await fetchPcc([...groupA], [...groupB]);
      if (seq !== requestSeq) return;
      renderHeatmap(matrix);
    } catch (error) {
      if (seq !== requestSeq) return;
      if (error instanceof ApiError) {
        renderBanner(
          error.payload?.error === "unknown_feature"
            ? `The service rejected a feature name (${String(error.payload["feature"] ?? "unknown")}).`
            : "The service rejected the request.",
        );
      } else if (error instanceof NetworkError) {
        renderBanner("Could not reach the service.");
      } else {
        renderBanner("Failed to load the correlation matrix.");
      }
    }
  }

  selectA.addEventListener("change", () => void load());
  selectB.addEventListener("change", () => void load());

  return { element: root, load };
}
