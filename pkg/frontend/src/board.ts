/** Pure view-model for the game board.
 *
 * The client never computes chip values: every number shown comes straight
 * from a server response.  This module only lays vertices on a circle
 * (fixed order by name, so screenshots are reproducible), flags debt, and
 * tracks the selection used for set-firing.
 */

import type { GraphPayload, MoveRecord, ServerState } from "./types.js";

export interface BoardVertex {
  name: string;
  x: number;
  y: number;
  chips: number;
  inDebt: boolean;
  selected: boolean;
  highlighted: boolean;
}

export interface BoardEdge {
  from: string;
  to: string;
  multiplicity: number;
}

export interface HistoryEntry {
  index: number;
  label: string;
}

export interface BoardView {
  vertices: BoardVertex[];
  won: boolean;
  degree: number;
  moveIndex: number;
  history: HistoryEntry[];
  canSetFire: boolean;
  canLendBorrow: boolean;
}

export function canonicalOrder(names: string[]): string[] {
  return [...names].sort((a, b) => (a < b ? -1 : a > b ? 1 : 0));
}

export function circleLayout(
  names: string[],
  radius = 180,
  center = 250,
): Map<string, { x: number; y: number }> {
  const ordered = canonicalOrder(names);
  const positions = new Map<string, { x: number; y: number }>();
  ordered.forEach((name, i) => {
    const angle = Math.PI / 2 - (2 * Math.PI * i) / ordered.length;
    positions.set(name, {
      x: center + radius * Math.cos(angle),
      y: center - radius * Math.sin(angle),
    });
  });
  return positions;
}

export function describeMove(move: { kind: string; vertices: string[] }): string {
  if (move.kind === "set_fire") {
    return `fire {${[...move.vertices].sort().join(", ")}}`;
  }
  return `${move.kind} ${move.vertices[0]}`;
}

export function renderState(
  state: ServerState,
  selection: ReadonlySet<string>,
  highlighted: ReadonlySet<string> = new Set(),
): BoardView {
  const names = canonicalOrder(Object.keys(state.chips));
  const layout = circleLayout(names);
  const vertices = names.map((name) => {
    const chips = state.chips[name];
    const { x, y } = layout.get(name)!;
    return {
      name,
      x,
      y,
      chips,
      inDebt: chips < 0,
      selected: selection.has(name),
      highlighted: highlighted.has(name),
    };
  });
  const history = (state.history ?? []).map((move: MoveRecord, i: number) => ({
    index: i + 1,
    label: describeMove(move),
  }));
  return {
    vertices,
    won: state.won,
    degree: state.degree,
    moveIndex: state.move_index,
    history,
    canSetFire: selection.size > 0 && !state.won,
    canLendBorrow: selection.size === 1,
  };
}

export function toggleSelection(
  selection: ReadonlySet<string>,
  vertex: string,
): Set<string> {
  const next = new Set(selection);
  if (next.has(vertex)) {
    next.delete(vertex);
  } else {
    next.add(vertex);
  }
  return next;
}

export function graphEdges(graph: GraphPayload): BoardEdge[] {
  return graph.edges.map(([from, to, multiplicity]) => ({ from, to, multiplicity }));
}

/** Parallel edges fan out with symmetric perpendicular offsets. */
export function edgeOffsets(multiplicity: number, spread = 14): number[] {
  const offsets: number[] = [];
  for (let k = 0; k < multiplicity; k += 1) {
    offsets.push(spread * k - (spread * (multiplicity - 1)) / 2);
  }
  return offsets;
}
