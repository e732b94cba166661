/**
 * Diverging blue-white-red scale spanning exactly [-1, 1], used by the
 * correlation heatmap. Undefined cells never enter the scale; callers grey
 * them out instead.
 */

const NEGATIVE_END: [number, number, number] = [33, 102, 172]; // strong blue at -1
const MIDPOINT: [number, number, number] = [247, 247, 247]; // near-white at 0
const POSITIVE_END: [number, number, number] = [178, 24, 43]; // strong red at +1

function interpolate(
  from: [number, number, number],
  to: [number, number, number],
  t: number,
): [number, number, number] {
  return [
    Math.round(from[0] + (to[0] - from[0]) * t),
    Math.round(from[1] + (to[1] - from[1]) * t),
    Math.round(from[2] + (to[2] - from[2]) * t),
  ];
}

/** CSS color for a correlation in [-1, 1]; values are clamped defensively. */
export function correlationColor(value: number): string {
  const clamped = Math.max(-1, Math.min(1, value));
  const [r, g, b] =
    clamped < 0
      ? interpolate(MIDPOINT, NEGATIVE_END, -clamped)
      : interpolate(MIDPOINT, POSITIVE_END, clamped);
  return `rgb(${r}, ${g}, ${b})`;
}

/** Readable text color against the cell background. */
export function correlationTextColor(value: number): string {
  return Math.abs(value) > 0.6 ? "#ffffff" : "#1a1a1a";
}
