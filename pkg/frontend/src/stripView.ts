// The AR strip R x [-pi/2, pi/2]: embedded objects as dots (boundary rows
// carry the degenerate ones), with the exchange rectangle of the last
// mutation highlighted. All coordinates come from the server.

import { EmbeddingResponse, GammaPoint } from "./api.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const W = 560;
const H = 220;
const PAD = 16;
const HALF_PI = Math.PI / 2;

export interface StripRange {
  aLo: number;
  aHi: number;
}

export function stripRange(points: GammaPoint[]): StripRange {
  if (points.length === 0) return { aLo: -Math.PI, aHi: Math.PI };
  const alphas = points.map((p) => p.alpha);
  const lo = Math.min(...alphas);
  const hi = Math.max(...alphas);
  const pad = Math.max(0.4, (hi - lo) * 0.25);
  return { aLo: lo - pad, aHi: hi + pad };
}

export function toScreen(p: GammaPoint, range: StripRange): { x: number; y: number } {
  const x = PAD + ((p.alpha - range.aLo) / (range.aHi - range.aLo)) * (W - 2 * PAD);
  const y = H - PAD - ((p.beta + HALF_PI) / Math.PI) * (H - 2 * PAD);
  return { x, y };
}

function rectanglePath(corners: GammaPoint[], range: StripRange): string {
  // order corners around their centroid so the highlight is a simple quad
  const cx = corners.reduce((s, c) => s + c.alpha, 0) / corners.length;
  const cy = corners.reduce((s, c) => s + c.beta, 0) / corners.length;
  const ordered = [...corners].sort(
    (a, b) => Math.atan2(a.beta - cy, a.alpha - cx) - Math.atan2(b.beta - cy, b.alpha - cx)
  );
  return (
    ordered
      .map((c, i) => {
        const s = toScreen(c, range);
        return `${i === 0 ? "M" : "L"}${s.x.toFixed(1)},${s.y.toFixed(1)}`;
      })
      .join(" ") + " Z"
  );
}

export function renderStrip(
  root: HTMLElement,
  embedding: EmbeddingResponse | null,
  rectangle: GammaPoint[] | null
): void {
  root.textContent = "";
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("width", String(W));
  svg.setAttribute("height", String(H));
  svg.setAttribute("data-view", "strip");

  const pts = [...(embedding?.elements ?? []), ...(rectangle ?? [])];
  const range = stripRange(pts);

  for (const beta of [HALF_PI, -HALF_PI]) {
    const line = document.createElementNS(SVG_NS, "line");
    const y = toScreen({ interval: "", alpha: 0, beta, position: 0 }, range).y;
    line.setAttribute("x1", String(PAD));
    line.setAttribute("x2", String(W - PAD));
    line.setAttribute("y1", y.toFixed(1));
    line.setAttribute("y2", y.toFixed(1));
    line.setAttribute("stroke", "#999");
    line.setAttribute("stroke-dasharray", "5 4");
    svg.appendChild(line);
  }

  if (rectangle && rectangle.length >= 3) {
    const path = document.createElementNS(SVG_NS, "path");
    path.setAttribute("d", rectanglePath(rectangle, range));
    path.setAttribute("fill", "#ffe9a8");
    path.setAttribute("stroke", "#d4a017");
    path.setAttribute("data-role", "exchange-rectangle");
    svg.appendChild(path);
    for (const corner of rectangle) {
      const s = toScreen(corner, range);
      const dot = document.createElementNS(SVG_NS, "circle");
      dot.setAttribute("cx", s.x.toFixed(1));
      dot.setAttribute("cy", s.y.toFixed(1));
      dot.setAttribute("r", "4");
      dot.setAttribute("fill", "#d4a017");
      dot.setAttribute("data-role", "rectangle-corner");
      dot.setAttribute("data-interval", corner.interval);
      dot.setAttribute("data-alpha", String(corner.alpha));
      dot.setAttribute("data-beta", String(corner.beta));
      svg.appendChild(dot);
    }
  }

  for (const e of embedding?.elements ?? []) {
    const s = toScreen(e, range);
    const onBoundary = Math.abs(Math.abs(e.beta) - HALF_PI) < 1e-9;
    const dot = document.createElementNS(SVG_NS, "circle");
    dot.setAttribute("cx", s.x.toFixed(1));
    dot.setAttribute("cy", s.y.toFixed(1));
    dot.setAttribute("r", "3.5");
    dot.setAttribute("fill", onBoundary ? "#b3261e" : "#1a4d8f");
    dot.setAttribute("data-role", "object");
    dot.setAttribute("data-label", e.label);
    dot.setAttribute("data-alpha", String(e.alpha));
    dot.setAttribute("data-beta", String(e.beta));
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = `${e.label} ↦ ${e.interval}`;
    dot.appendChild(title);
    svg.appendChild(dot);
  }

  root.appendChild(svg);
}
