// Wire types mirroring the server JSON exactly. The client never derives
// or recomputes costs: every number shown on screen comes from these
// payloads verbatim.

export interface GraphDoc {
  directed: boolean;
  n: number;
  edges: [number, number, number][];
  s: number;
  t: number;
  labels: string[] | null;
}

export interface CostPairJson {
  decider: number;
  follower: number;
}

export interface LegalMoveJson {
  next: number;
  cost: number;
  what_if?: CostPairJson;
}

export interface StateJson {
  current: number;
  parity: number;
  to_move: 'A' | 'B';
  visited: [number, number][];
  cost_a: number;
  cost_b: number;
  terminal: boolean;
}

export interface SessionJson {
  session: string;
  mode: string;
  human_side: 'A' | 'B';
  graph: GraphDoc;
  state: StateJson;
  history: number[];
  hints: boolean;
  legal_moves: LegalMoveJson[];
}

export interface SolutionJson {
  cost_a: number;
  cost_b: number;
  walk: number[];
  payers: string[];
  node_count: number;
  algorithm: string;
}

export interface ApiErrorJson {
  error?: string;
  detail?: string;
  rule?: string | null;
}
