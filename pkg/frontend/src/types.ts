/** Payload shapes of the chipgame session protocol. */

export interface GraphPayload {
  vertices: string[];
  edges: [string, string, number][];
}

export interface DivisorPayload {
  graph: GraphPayload;
  degrees: Record<string, number>;
}

export type MoveKind = "lend" | "borrow" | "set_fire";

export interface MoveRecord {
  kind: MoveKind;
  vertices: string[];
  chips: Record<string, number>;
}

/** Every server response carries these fields. */
export interface ServerState {
  session_id: string;
  move_index: number;
  chips: Record<string, number>;
  degree: number;
  won: boolean;
  history?: MoveRecord[];
  initial_chips?: Record<string, number>;
  graph?: GraphPayload;
}

export interface HintResult {
  kind: "dhar_set" | "borrow_at" | "none";
  vertices: string[];
  rationale: string;
}

export interface EwdStep {
  iteration: number;
  fired: string[];
  chips: Record<string, number>;
}

export interface AnalysisResponse extends ServerState {
  kind: string;
  result: Record<string, unknown>;
}

export interface ApiError {
  code: string;
  message: string;
  path: string;
}
