import { describe, expect, it } from "vitest";

import {
  canonicalOrder,
  circleLayout,
  describeMove,
  edgeOffsets,
  graphEdges,
  renderState,
  toggleSelection,
} from "../src/board.js";
import type { ServerState } from "../src/types.js";

const figState: ServerState = {
  session_id: "s1",
  move_index: 0,
  chips: { Alice: 2, Bob: -3, Charlie: 4, Elise: -1 },
  degree: 2,
  won: false,
  history: [],
};

describe("renderState", () => {
  it("shows every vertex with its server-sent chip count", () => {
    const view = renderState(figState, new Set());
    expect(view.vertices.map((v) => v.name)).toEqual([
      "Alice",
      "Bob",
      "Charlie",
      "Elise",
    ]);
    expect(view.vertices.map((v) => v.chips)).toEqual([2, -3, 4, -1]);
  });

  it("marks exactly the indebted vertices", () => {
    const view = renderState(figState, new Set());
    const debt = view.vertices.filter((v) => v.inDebt).map((v) => v.name);
    expect(debt).toEqual(["Bob", "Elise"]);
  });

  it("never recomputes chips: values are passed through verbatim", () => {
    const weird: ServerState = {
      ...figState,
      chips: { Alice: 123, Bob: -999, Charlie: 0, Elise: 7 },
    };
    const view = renderState(weird, new Set());
    expect(view.vertices.map((v) => v.chips)).toEqual([123, -999, 0, 7]);
  });

  it("raises the win banner on won states", () => {
    const won: ServerState = {
      ...figState,
      chips: { Alice: 2, Bob: 0, Charlie: 0, Elise: 0 },
      won: true,
      move_index: 3,
    };
    expect(renderState(won, new Set()).won).toBe(true);
  });

  it("disables set-fire for an empty selection and on won states", () => {
    expect(renderState(figState, new Set()).canSetFire).toBe(false);
    expect(renderState(figState, new Set(["Alice"])).canSetFire).toBe(true);
    const won = { ...figState, won: true };
    expect(renderState(won, new Set(["Alice"])).canSetFire).toBe(false);
  });

  it("enables lend/borrow only for single selections", () => {
    expect(renderState(figState, new Set()).canLendBorrow).toBe(false);
    expect(renderState(figState, new Set(["Alice"])).canLendBorrow).toBe(true);
    expect(renderState(figState, new Set(["Alice", "Bob"])).canLendBorrow).toBe(false);
  });

  it("history panel length equals the server move index", () => {
    const moved: ServerState = {
      ...figState,
      move_index: 2,
      history: [
        { kind: "set_fire", vertices: ["Alice", "Charlie"], chips: {} },
        { kind: "borrow", vertices: ["Bob"], chips: {} },
      ],
    };
    const view = renderState(moved, new Set());
    expect(view.history).toHaveLength(view.moveIndex);
    expect(view.history[0].label).toBe("fire {Alice, Charlie}");
    expect(view.history[1].label).toBe("borrow Bob");
  });

  it("flags selected and highlighted vertices", () => {
    const view = renderState(figState, new Set(["Bob"]), new Set(["Elise"]));
    expect(view.vertices.find((v) => v.name === "Bob")?.selected).toBe(true);
    expect(view.vertices.find((v) => v.name === "Elise")?.highlighted).toBe(true);
  });
});

describe("layout", () => {
  it("is deterministic and ordered by canonical name", () => {
    const a = circleLayout(["Bob", "Alice", "Charlie"]);
    const b = circleLayout(["Charlie", "Bob", "Alice"]);
    expect([...a.entries()]).toEqual([...b.entries()]);
    expect(canonicalOrder(["b", "a", "c"])).toEqual(["a", "b", "c"]);
  });

  it("places the first vertex at the top of the circle", () => {
    const layout = circleLayout(["x"], 100, 250);
    expect(layout.get("x")).toEqual({ x: 250, y: 150 });
  });
});

describe("selection and edges", () => {
  it("toggles without mutating the input", () => {
    const initial = new Set(["Alice"]);
    const added = toggleSelection(initial, "Bob");
    expect([...added].sort()).toEqual(["Alice", "Bob"]);
    expect([...initial]).toEqual(["Alice"]);
    expect([...toggleSelection(added, "Alice")]).toEqual(["Bob"]);
  });

  it("expands graph payloads into drawable edges", () => {
    const edges = graphEdges({
      vertices: ["a", "b"],
      edges: [["a", "b", 2]],
    });
    expect(edges).toEqual([{ from: "a", to: "b", multiplicity: 2 }]);
  });

  it("fans parallel edges symmetrically", () => {
    expect(edgeOffsets(1)).toEqual([0]);
    expect(edgeOffsets(2)).toEqual([-7, 7]);
    expect(edgeOffsets(3)).toEqual([-14, 0, 14]);
  });

  it("describes set-firing moves with sorted members", () => {
    expect(describeMove({ kind: "set_fire", vertices: ["c", "a"] })).toBe(
      "fire {a, c}",
    );
  });
});
