/**
 * Single-page shell with three views; the calculator is the landing view.
 * Analytics views fetch lazily on first activation.
 */

import { clear, el } from "./dom.js";
import { createCalculatorView } from "./views/calculator.js";
import { createCorrelationsView } from "./views/correlations.js";
import { createImportanceView } from "./views/importance.js";

interface ViewEntry {
  label: string;
  element: HTMLElement;
  activate?: () => void;
}

export function mountApp(container: HTMLElement): void {
  const calculator = createCalculatorView();
  const importance = createImportanceView();
  const correlations = createCorrelationsView();

  let importanceLoaded = false;
  let correlationsLoaded = false;

  const views: ViewEntry[] = [
    { label: "Calculator", element: calculator },
    {
      label: "Importance",
      element: importance.element,
      activate: () => {
        if (!importanceLoaded) {
          importanceLoaded = true;
          void importance.load();
        }
      },
    },
    {
      label: "Correlations",
      element: correlations.element,
      activate: () => {
        if (!correlationsLoaded) {
          correlationsLoaded = true;
          void correlations.load();
        }
      },
    },
  ];

  const nav = el("nav", { className: "tabs" });
  const main = el("main", { className: "view-host" });

  const buttons = views.map((view, index) => {
    const button = el("button", { className: "tab", text: view.label });
    button.addEventListener("click", () => show(index));
    nav.append(button);
    return button;
  });

  function show(index: number): void {
    const view = views[index];
    if (!view) return;
    buttons.forEach((button, i) => button.classList.toggle("tab-active", i === index));
    clear(main);
    main.append(view.element);
    view.activate?.();
  }

  clear(container);
  container.append(
    el("header", { className: "masthead" }, [
      el("h1", { text: "Energy Equity Portal" }),
      el("p", { text: "Burden, drivers, and disparities across locales" }),
    ]),
    nav,
    main,
  );
  show(0);
}

const rootElement = typeof document !== "undefined" ? document.getElementById("app") : null;
if (rootElement) {
  mountApp(rootElement);
}
