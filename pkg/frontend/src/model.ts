// Board state as mirrored from the server, plus the turn lock.
//
// All game logic lives server-side; this model only stores the latest
// session payload and guards against requests the server would reject
// (clicks on non-legal edges, clicks out of turn, double clicks).

import { ApiClient, ApiError } from './api.js';
import type { GraphDoc, LegalMoveJson, SessionJson, SolutionJson } from './types.js';

export class BoardModel {
  session: SessionJson | null = null;
  equilibrium: SolutionJson | null = null;
  lastError: string | null = null;
  lastRule: string | null = null;
  connectionLost = false;
  private pending = false;

  constructor(private readonly client: ApiClient) {}

  async start(graph: GraphDoc, humanSide: 'A' | 'B',
              mode: 'engine' | 'human' = 'engine'): Promise<void> {
    // the summary panel compares the finished game against the engine's
    // precomputed equilibrium; both numbers come from the server
    this.equilibrium = await this.client.solve(graph);
    this.session = await this.client.createSession(graph, humanSide, mode);
    this.lastError = null;
    this.lastRule = null;
  }

  legalMoves(): LegalMoveJson[] {
    return this.session?.legal_moves ?? [];
  }

  legalTargets(): Set<number> {
    return new Set(this.legalMoves().map((m) => m.next));
  }

  isHumanTurn(): boolean {
    const s = this.session;
    if (!s || s.state.terminal) return false;
    return s.mode === 'human' || s.state.to_move === s.human_side;
  }

  moveLog(): number[] {
    return this.session ? [...this.session.history] : [];
  }

  /**
   * Post a human move. Returns true iff a request was sent; clicks on
   * disabled edges, clicks out of turn, and double clicks send nothing.
   */
  async playTurn(next: number): Promise<boolean> {
    const s = this.session;
    if (!s || this.pending || !this.isHumanTurn() || !this.legalTargets().has(next)) {
      return false;
    }
    this.pending = true;
    try {
      this.session = await this.client.postMove(s.session, next);
      this.lastError = null;
      this.lastRule = null;
    } catch (err) {
      if (err instanceof ApiError) {
        // surfaced verbatim in the board's error line
        this.lastError = err.message;
        this.lastRule = err.payload.rule ?? null;
      } else {
        this.connectionLost = true;
      }
    } finally {
      this.pending = false;
    }
    return true;
  }

  async refresh(): Promise<void> {
    const s = this.session;
    if (!s) return;
    try {
      this.session = await this.client.readSession(s.session);
      this.connectionLost = false;
    } catch (err) {
      if (!(err instanceof ApiError)) {
        this.connectionLost = true;
      }
    }
  }
}
