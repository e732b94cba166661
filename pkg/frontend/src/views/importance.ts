/**
 * Feature-importance view: horizontal bars in the API's descending order,
 * weights shown as percentages to two decimals. An all-zero model (a tree
 * with no splits) and a 503 both render empty-state panels instead of bars.
 */

import { ApiError, ImportanceEntry, NetworkError, fetchImportance } from "../api.js";
import { clear, el } from "../dom.js";
import { formatWeightPct } from "../format.js";

export function createImportanceView(): { element: HTMLElement; load: () => Promise<void> } {
  const root = el("section", { className: "view importance-view" });
  const heading = el("h2", { text: "What Drives Consumption" });
  const body = el("div", { className: "importance-body" });
  root.append(heading, body);

  let requestSeq = 0;

  function renderBars(entries: ImportanceEntry[]): void {
    clear(body);
    if (entries.every((entry) => entry.weight === 0)) {
      body.append(el("p", { className: "empty-state", text: "The model has no splits; no feature carries importance." }));
      return;
    }
    const maxWeight = Math.max(...entries.map((entry) => entry.weight));
    const chart = el("div", { className: "bar-chart" });
    for (const entry of entries) {
      const width = maxWeight > 0 ? (entry.weight / maxWeight) * 100 : 0;
      const bar = el("div", { className: "bar" });
      bar.style.width = `${width}%`;
      chart.append(
        el("div", { className: "bar-row", attrs: { "data-feature": entry.feature } }, [
          el("span", { className: "bar-label", text: entry.feature }),
          el("div", { className: "bar-track" }, [bar]),
          el("span", { className: "bar-value", text: formatWeightPct(entry.weight) }),
        ]),
      );
    }
    body.append(chart);
  }

  function renderEmptyState(message: string): void {
    clear(body);
    body.append(el("p", { className: "empty-state", text: message }));
  }

  function renderBanner(message: string): void {
    clear(body);
    const retry = el("button", { className: "retry", text: "Retry" });
    retry.addEventListener("click", () => void load());
    body.append(el("div", { className: "error-banner" }, [el("span", { text: message }), retry]));
  }

  async function load(): Promise<void> {
    const seq = ++requestSeq;
    try {
      const entries = await fetchImportance();
      if (seq !== requestSeq) return;
      renderBars(entries);
    } catch (error) {
      if (seq !== requestSeq) return;
      if (error instanceof ApiError && error.status === 503) {
        renderEmptyState("The consumption model is unavailable on this snapshot.");
      } else if (error instanceof NetworkError) {
        renderBanner("Could not reach the service.");
      } else {
        renderBanner("Failed to load feature importances.");
      }
    }
  }

  return { element: root, load };
}
