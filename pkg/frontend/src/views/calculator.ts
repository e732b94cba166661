/**
 * Energy burden calculator: the landing view. A resident enters a zip code
 * and gets their locale's burden, status badge, and tailored tips when the
 * locale is overburdened. No domain math happens here; the card renders the
 * API's numbers with display rounding only.
 */

import { ApiError, BurdenReport, NetworkError, fetchBurden } from "../api.js";
import { clear, el } from "../dom.js";
import { formatBurdenPct } from "../format.js";
import { isValidZip } from "../validate.js";

export function createCalculatorView(): HTMLElement {
  const root = el("section", { className: "view calculator-view" });
  const heading = el("h2", { text: "Energy Burden Calculator" });
  const intro = el("p", {
    className: "intro",
    text: "Enter your 5-character zip code to see the share of median household income your area spends on electricity and heating.",
  });

  const input = el("input", {
    className: "zip-input",
    attrs: { type: "text", placeholder: "e.g. 07043", maxlength: "5", name: "zip" },
  });
  const submit = el("button", { className: "submit", text: "Calculate" });
  const form = el("form", { className: "zip-form" }, [input, submit]);

  const inlineError = el("p", { className: "inline-error", attrs: { hidden: "" } });
  const banner = el("div", { className: "error-banner", attrs: { hidden: "" } });
  const result = el("div", { className: "result", attrs: { hidden: "" } });

  root.append(heading, intro, form, inlineError, banner, result);

  let requestSeq = 0;

  function showInlineError(message: string): void {
    inlineError.textContent = message;
    inlineError.removeAttribute("hidden");
    banner.setAttribute("hidden", "");
    result.setAttribute("hidden", "");
  }

  function showBanner(message: string, zip: string): void {
    clear(banner);
    const retry = el("button", { className: "retry", text: "Retry" });
    retry.addEventListener("click", () => submitZip(zip));
    banner.append(el("span", { text: message }), retry);
    banner.removeAttribute("hidden");
    inlineError.setAttribute("hidden", "");
    result.setAttribute("hidden", "");
  }

  function showReport(report: BurdenReport): void {
    clear(result);
    const overburdened = report.status === "Overburdened";
    const badge = el("span", {
      className: `badge ${overburdened ? "badge-over" : "badge-below"}`,
      text: report.message,
    });
    const value = el("p", { className: "burden-value", text: formatBurdenPct(report.energy_burden_pct) });
    const context = el("p", {
      className: "burden-context",
      text: `State average: ${formatBurdenPct(report.state_average_pct)} (locale ${report.locale_id})`,
    });
    result.append(badge, value, context);
    if (overburdened && report.tips && report.tips.length > 0) {
      const tips = el("ul", { className: "tips" });
      for (const tip of report.tips) {
        tips.append(el("li", { text: tip }));
      }
      result.append(el("h3", { text: "Ways to lower your energy burden" }), tips);
    }
    result.removeAttribute("hidden");
    inlineError.setAttribute("hidden", "");
    banner.setAttribute("hidden", "");
  }

  async function submitZip(zip: string): Promise<void> {
    if (!isValidZip(zip)) {
      showInlineError("Zip codes are exactly 5 letters or digits.");
      return;
    }
    const seq = ++requestSeq;
    try {
      const report = await fetchBurden(zip);
      if (seq !== requestSeq) return; // superseded by a newer submission
      showReport(report);
    } catch (error) {
      if (seq !== requestSeq) return;
      if (error instanceof ApiError && error.status === 404) {
        showInlineError("Zip not found.");
      } else if (error instanceof ApiError && error.status === 400) {
        showInlineError("That zip code was rejected as invalid.");
      } else if (error instanceof NetworkError) {
        showBanner("Could not reach the service.", zip);
      } else {
        showBanner("Something went wrong fetching the report.", zip);
      }
    }
  }

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void submitZip(input.value.trim());
  });

  return root;
}
