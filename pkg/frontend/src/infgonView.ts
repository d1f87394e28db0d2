// Windowed infinity-gon view: integer vertices on a baseline, finite arcs
// as clickable half-circles, fountain tails as fading bundles at their
// vertices. Tail arcs are not individually mutable; clicking one surfaces
// a notice instead.

import { ArcSet } from "./api.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const W = 560;
const H = 200;
const BASE = H - 40;

export interface InfgonHandlers {
  onArcClick(label: string): void;
  onTailClick(): void;
}

export function arcWindow(arcs: ArcSet, pad = 2): { lo: number; hi: number } {
  const xs: number[] = [];
  for (const [i, j] of arcs.finite) xs.push(i, j);
  for (const [m, i0] of arcs.leftTails) xs.push(m, i0);
  for (const [n, j0] of arcs.rightTails) xs.push(n, j0);
  if (xs.length === 0) return { lo: -4, hi: 4 };
  return { lo: Math.min(...xs) - pad, hi: Math.max(...xs) + pad };
}

export function renderInfgon(root: HTMLElement, arcs: ArcSet, handlers: InfgonHandlers): void {
  root.textContent = "";
  const { lo, hi } = arcWindow(arcs);
  const sx = (v: number) => 20 + ((v - lo) / (hi - lo)) * (W - 40);

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("width", String(W));
  svg.setAttribute("height", String(H));
  svg.setAttribute("data-view", "infgon");

  const baseline = document.createElementNS(SVG_NS, "line");
  baseline.setAttribute("x1", "10");
  baseline.setAttribute("x2", String(W - 10));
  baseline.setAttribute("y1", String(BASE));
  baseline.setAttribute("y2", String(BASE));
  baseline.setAttribute("stroke", "#444");
  svg.appendChild(baseline);

  const arcPath = (i: number, j: number) => {
    const x1 = sx(i);
    const x2 = sx(j);
    const r = (x2 - x1) / 2;
    return `M${x1.toFixed(1)},${BASE} A${r.toFixed(1)},${(r * 0.8).toFixed(1)} 0 0 1 ${x2.toFixed(1)},${BASE}`;
  };

  for (const [i, j] of arcs.finite) {
    const label = `${i}-${j}`;
    const path = document.createElementNS(SVG_NS, "path");
    path.setAttribute("d", arcPath(i, j));
    path.setAttribute("fill", "none");
    path.setAttribute("stroke", "#1a4d8f");
    path.setAttribute("stroke-width", "2.5");
    path.setAttribute("data-arc", label);
    path.style.cursor = "pointer";
    path.addEventListener("click", () => handlers.onArcClick(label));
    svg.appendChild(path);
  }

  const bundle = (vertex: number, toward: number, count: number) => {
    for (let k = 1; k <= count; k += 1) {
      const other = toward > vertex ? toward + k - 1 : toward - k + 1;
      const [i, j] = other < vertex ? [other, vertex] : [vertex, other];
      const path = document.createElementNS(SVG_NS, "path");
      path.setAttribute("d", arcPath(i, j));
      path.setAttribute("fill", "none");
      path.setAttribute("stroke", "#777");
      path.setAttribute("stroke-opacity", (0.65 - k * 0.12).toFixed(2));
      path.setAttribute("data-tail", `${i}-${j}`);
      path.style.cursor = "not-allowed";
      path.addEventListener("click", () => handlers.onTailClick());
      svg.appendChild(path);
    }
  };
  for (const [m, i0] of arcs.leftTails) bundle(m, i0, 4);
  for (const [n, j0] of arcs.rightTails) bundle(n, j0, 4);

  for (let v = Math.ceil(lo); v <= Math.floor(hi); v += 1) {
    const dot = document.createElementNS(SVG_NS, "circle");
    dot.setAttribute("cx", sx(v).toFixed(1));
    dot.setAttribute("cy", String(BASE));
    dot.setAttribute("r", "3");
    dot.setAttribute("fill", "#222");
    svg.appendChild(dot);
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", sx(v).toFixed(1));
    label.setAttribute("y", String(BASE + 16));
    label.setAttribute("font-size", "10");
    label.setAttribute("text-anchor", "middle");
    label.textContent = String(v);
    svg.appendChild(label);
  }

  root.appendChild(svg);
}
