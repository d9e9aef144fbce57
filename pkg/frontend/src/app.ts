/** DOM wiring: server-authoritative play loop.
 *
 * The board re-renders only from server responses; no chip arithmetic
 * happens here.  Failed requests leave the board untouched and surface the
 * error inline.
 */

import { GameClient, ServerError } from "./api.js";
import {
  BoardEdge,
  graphEdges,
  renderState,
  toggleSelection,
} from "./board.js";
import { renderBoardSvg } from "./svg.js";
import type { DivisorPayload, EwdStep, HintResult, ServerState } from "./types.js";

const EXAMPLE: DivisorPayload = {
  graph: {
    vertices: ["Alice", "Bob", "Charlie", "Elise"],
    edges: [
      ["Alice", "Bob", 1],
      ["Alice", "Charlie", 1],
      ["Alice", "Elise", 2],
      ["Bob", "Charlie", 1],
      ["Charlie", "Elise", 1],
    ],
  },
  degrees: { Alice: 2, Bob: -3, Charlie: 4, Elise: -1 },
};

interface AppState {
  sessionId: string | null;
  state: ServerState | null;
  edges: BoardEdge[];
  selection: Set<string>;
  highlighted: Set<string>;
  replay: EwdStep[] | null;
  replayIndex: number;
}

const app: AppState = {
  sessionId: null,
  state: null,
  edges: [],
  selection: new Set(),
  highlighted: new Set(),
  replay: null,
  replayIndex: 0,
};

const client = new GameClient("");

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function setMessage(text: string, isError = false): void {
  const box = el<HTMLDivElement>("message");
  box.textContent = text;
  box.className = isError ? "message error" : "message";
}

function redraw(): void {
  if (!app.state) return;
  const replayStep =
    app.replay !== null ? app.replay[app.replayIndex] : null;
  const shown: ServerState = replayStep
    ? { ...app.state, chips: replayStep.chips, won: false }
    : app.state;
  const highlighted = replayStep ? new Set(replayStep.fired) : app.highlighted;
  const view = renderState(shown, app.selection, highlighted);

  el<HTMLDivElement>("board").innerHTML = renderBoardSvg(view, app.edges);
  el<HTMLSpanElement>("degree").textContent = String(view.degree);
  el<HTMLSpanElement>("move-index").textContent = String(view.moveIndex);
  el<HTMLDivElement>("win-banner").hidden = !view.won;
  el<HTMLButtonElement>("fire-button").disabled = !view.canSetFire;
  el<HTMLButtonElement>("lend-button").disabled = !view.canLendBorrow;
  el<HTMLButtonElement>("borrow-button").disabled = !view.canLendBorrow;
  el<HTMLButtonElement>("undo-button").disabled = view.moveIndex === 0;

  const history = el<HTMLOListElement>("history");
  history.innerHTML = "";
  for (const entry of view.history) {
    const item = document.createElement("li");
    item.textContent = entry.label;
    history.appendChild(item);
  }

  const replayBar = el<HTMLDivElement>("replay-bar");
  replayBar.hidden = app.replay === null;
  if (app.replay !== null) {
    el<HTMLSpanElement>("replay-step").textContent = `${app.replayIndex + 1} / ${
      app.replay.length
    }`;
  }
}

async function refreshFromServer(): Promise<void> {
  if (!app.sessionId) return;
  const state = await client.getState(app.sessionId);
  app.state = state;
  if (state.graph) {
    app.edges = graphEdges(state.graph);
  }
  redraw();
}

function applyState(state: ServerState): void {
  app.state = { ...state, history: app.state?.history };
  app.replay = null;
  void refreshFromServer().catch(() => redraw());
}

async function guarded(action: () => Promise<void>): Promise<void> {
  try {
    setMessage("");
    await action();
  } catch (error) {
    if (error instanceof ServerError) {
      setMessage(`${error.code}: ${error.message}`, true);
    } else {
      setMessage(String(error), true);
    }
  }
}

function startHandlers(): void {
  el<HTMLTextAreaElement>("payload").value = JSON.stringify(EXAMPLE, null, 2);

  el<HTMLButtonElement>("start-button").addEventListener("click", () =>
    guarded(async () => {
      const payload = JSON.parse(el<HTMLTextAreaElement>("payload").value);
      const state = await client.createSession(payload);
      app.sessionId = state.session_id;
      app.edges = graphEdges(payload.graph);
      app.selection = new Set();
      app.highlighted = new Set();
      app.state = state;
      el<HTMLDivElement>("setup").hidden = true;
      el<HTMLDivElement>("game").hidden = false;
      el<HTMLSpanElement>("session-label").textContent = state.session_id;
      await refreshFromServer();
    }),
  );

  el<HTMLButtonElement>("resume-button").addEventListener("click", () =>
    guarded(async () => {
      const sessionId = el<HTMLInputElement>("resume-id").value.trim();
      const state = await client.getState(sessionId);
      app.sessionId = sessionId;
      app.state = state;
      app.edges = state.graph ? graphEdges(state.graph) : [];
      app.selection = new Set();
      el<HTMLDivElement>("setup").hidden = true;
      el<HTMLDivElement>("game").hidden = false;
      el<HTMLSpanElement>("session-label").textContent = sessionId;
      redraw();
    }),
  );

  el<HTMLDivElement>("board").addEventListener("click", (event) => {
    const target = (event.target as Element).closest("[data-vertex]");
    if (!target || app.replay !== null) return;
    const vertex = target.getAttribute("data-vertex")!;
    app.selection = toggleSelection(app.selection, vertex);
    app.highlighted = new Set();
    redraw();
  });

  const moveButton = (id: string, kind: "lend" | "borrow" | "set_fire") => {
    el<HTMLButtonElement>(id).addEventListener("click", () =>
      guarded(async () => {
        if (!app.sessionId || app.selection.size === 0) return;
        const state = await client.postMove(app.sessionId, kind, [...app.selection]);
        app.selection = new Set();
        app.highlighted = new Set();
        applyState(state);
      }),
    );
  };
  moveButton("fire-button", "set_fire");
  moveButton("lend-button", "lend");
  moveButton("borrow-button", "borrow");

  el<HTMLButtonElement>("undo-button").addEventListener("click", () =>
    guarded(async () => {
      if (!app.sessionId) return;
      applyState(await client.undo(app.sessionId));
    }),
  );

  el<HTMLButtonElement>("hint-button").addEventListener("click", () =>
    guarded(async () => {
      if (!app.sessionId) return;
      const q = el<HTMLInputElement>("q-input").value.trim() || undefined;
      const response = await client.analysis(app.sessionId, "hint", q);
      const hint = response.result as unknown as HintResult;
      app.highlighted = new Set(hint.vertices);
      if (hint.kind === "dhar_set") {
        app.selection = new Set(hint.vertices);
      }
      setMessage(`hint (${hint.kind}): ${hint.rationale}`);
      redraw();
    }),
  );

  const analysisButton = (id: string, kind: string) => {
    el<HTMLButtonElement>(id).addEventListener("click", () =>
      guarded(async () => {
        if (!app.sessionId) return;
        const q = el<HTMLInputElement>("q-input").value.trim() || undefined;
        const response = await client.analysis(app.sessionId, kind, q);
        setMessage(`${kind}: ${JSON.stringify(response.result)}`);
      }),
    );
  };
  analysisButton("winnable-button", "winnable");
  analysisButton("qreduce-button", "qreduce");
  analysisButton("rank-button", "rank");

  el<HTMLButtonElement>("replay-button").addEventListener("click", () =>
    guarded(async () => {
      if (!app.sessionId) return;
      const q = el<HTMLInputElement>("q-input").value.trim() || undefined;
      const response = await client.analysis(app.sessionId, "ewd_replay", q);
      const steps = (response.result as { steps?: EwdStep[] }).steps ?? [];
      if (!steps.length) {
        setMessage("no replay steps available");
        return;
      }
      app.replay = steps;
      app.replayIndex = 0;
      setMessage(`replaying ${steps.length} reduction steps (server computed)`);
      redraw();
    }),
  );

  el<HTMLButtonElement>("replay-next").addEventListener("click", () => {
    if (app.replay && app.replayIndex < app.replay.length - 1) {
      app.replayIndex += 1;
      redraw();
    }
  });
  el<HTMLButtonElement>("replay-prev").addEventListener("click", () => {
    if (app.replay && app.replayIndex > 0) {
      app.replayIndex -= 1;
      redraw();
    }
  });
  el<HTMLButtonElement>("replay-close").addEventListener("click", () => {
    app.replay = null;
    redraw();
  });
}

document.addEventListener("DOMContentLoaded", startHandlers);
