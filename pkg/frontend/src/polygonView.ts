// The clickable (n+3)-gon. Vertices are labeled counterclockwise starting
// at the lower left, matching the engine's labeling; clicking a diagonal
// requests the corresponding mutation.

import { EmbeddingResponse } from "./api.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const SIZE = 320;
const R = 130;

export interface PolygonHandlers {
  onDiagonalClick(label: string): void;
}

export function vertexPosition(k: number, m: number): { x: number; y: number } {
  // vertex 1 at the lower left, proceeding counterclockwise
  const angle = Math.PI + ((k - 1) / m) * 2 * Math.PI + Math.PI / m;
  return {
    x: SIZE / 2 + R * Math.cos(angle),
    y: SIZE / 2 + R * Math.sin(angle),
  };
}

function hoverText(label: string, embedding: EmbeddingResponse | null): string {
  const match = embedding?.elements.find((e) => e.label === label);
  return match ? `${label} ↦ ${match.interval}` : label;
}

export function renderPolygon(
  root: HTMLElement,
  n: number,
  diagonals: string[],
  embedding: EmbeddingResponse | null,
  handlers: PolygonHandlers
): void {
  const m = n + 3;
  root.textContent = "";
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("width", String(SIZE));
  svg.setAttribute("height", String(SIZE));
  svg.setAttribute("data-view", "polygon");

  const outline = document.createElementNS(SVG_NS, "polygon");
  outline.setAttribute(
    "points",
    Array.from({ length: m }, (_, i) => {
      const p = vertexPosition(i + 1, m);
      return `${p.x.toFixed(1)},${p.y.toFixed(1)}`;
    }).join(" ")
  );
  outline.setAttribute("fill", "none");
  outline.setAttribute("stroke", "#444");
  svg.appendChild(outline);

  for (const label of diagonals) {
    const [i, j] = label.split("-").map(Number);
    const a = vertexPosition(i, m);
    const b = vertexPosition(j, m);
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", a.x.toFixed(1));
    line.setAttribute("y1", a.y.toFixed(1));
    line.setAttribute("x2", b.x.toFixed(1));
    line.setAttribute("y2", b.y.toFixed(1));
    line.setAttribute("stroke", "#1a4d8f");
    line.setAttribute("stroke-width", "3");
    line.setAttribute("data-diagonal", label);
    line.style.cursor = "pointer";
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = hoverText(label, embedding);
    line.appendChild(title);
    line.addEventListener("click", () => handlers.onDiagonalClick(label));
    svg.appendChild(line);
  }

  for (let k = 1; k <= m; k += 1) {
    const p = vertexPosition(k, m);
    const dot = document.createElementNS(SVG_NS, "circle");
    dot.setAttribute("cx", p.x.toFixed(1));
    dot.setAttribute("cy", p.y.toFixed(1));
    dot.setAttribute("r", "4");
    dot.setAttribute("fill", "#222");
    svg.appendChild(dot);
    const label = document.createElementNS(SVG_NS, "text");
    const out = 1.12;
    label.setAttribute("x", (SIZE / 2 + (p.x - SIZE / 2) * out).toFixed(1));
    label.setAttribute("y", (SIZE / 2 + (p.y - SIZE / 2) * out).toFixed(1));
    label.setAttribute("font-size", "12");
    label.setAttribute("text-anchor", "middle");
    label.textContent = String(k);
    svg.appendChild(label);
  }

  root.appendChild(svg);
}
