/** Deterministic SVG rendering of a board view (pure string building). */

import type { BoardEdge, BoardView } from "./board.js";
import { edgeOffsets } from "./board.js";

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function edgePath(
  from: { x: number; y: number },
  to: { x: number; y: number },
  offset: number,
): string {
  if (offset === 0) {
    return `M ${from.x} ${from.y} L ${to.x} ${to.y}`;
  }
  const mx = (from.x + to.x) / 2;
  const my = (from.y + to.y) / 2;
  const dx = to.x - from.x;
  const dy = to.y - from.y;
  const len = Math.hypot(dx, dy) || 1;
  const cx = mx - (dy / len) * 2 * offset;
  const cy = my + (dx / len) * 2 * offset;
  return `M ${from.x} ${from.y} Q ${cx} ${cy} ${to.x} ${to.y}`;
}

export function renderBoardSvg(view: BoardView, edges: BoardEdge[]): string {
  const position = new Map(view.vertices.map((v) => [v.name, { x: v.x, y: v.y }]));
  const parts: string[] = [
    '<svg viewBox="0 0 500 500" role="img" aria-label="game board">',
  ];
  for (const edge of edges) {
    const from = position.get(edge.from);
    const to = position.get(edge.to);
    if (!from || !to) continue;
    for (const offset of edgeOffsets(edge.multiplicity)) {
      parts.push(`<path class="edge" d="${edgePath(from, to, offset)}" />`);
    }
  }
  for (const vertex of view.vertices) {
    const classes = ["vertex"];
    if (vertex.inDebt) classes.push("debt");
    if (vertex.selected) classes.push("selected");
    if (vertex.highlighted) classes.push("highlighted");
    const name = escapeXml(vertex.name);
    parts.push(
      `<g class="${classes.join(" ")}" data-vertex="${name}">` +
        `<circle cx="${vertex.x}" cy="${vertex.y}" r="28" />` +
        `<text class="name" x="${vertex.x}" y="${vertex.y - 4}">${name}</text>` +
        `<text class="chips" x="${vertex.x}" y="${vertex.y + 14}">${vertex.chips}</text>` +
        `</g>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}
