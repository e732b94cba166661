import { describe, expect, it } from "vitest";
import { formatBurdenPct, formatCorrelation, formatWeightPct } from "../src/format.js";

describe("display rounding", () => {
  it("burden shows two decimals", () => {
    expect(formatBurdenPct(10)).toBe("10.00%");
    expect(formatBurdenPct(3.5333333333333337)).toBe("3.53%");
    expect(formatBurdenPct(7.895082553022531)).toBe("7.90%");
  });

  it("weights render as percentages to two decimals", () => {
    expect(formatWeightPct(0.9309366908229932)).toBe("93.09%");
    expect(formatWeightPct(0.1575)).toBe("15.75%");
    expect(formatWeightPct(0)).toBe("0.00%");
  });

  it("correlations render to two decimals with n/a for undefined", () => {
    expect(formatCorrelation(0.9492507817103243)).toBe("0.95");
    expect(formatCorrelation(-0.6949385300626926)).toBe("-0.69");
    expect(formatCorrelation(1)).toBe("1.00");
    expect(formatCorrelation(null)).toBe("n/a");
  });
});
