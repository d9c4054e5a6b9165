import type {
  ConjectureRequest,
  ConjectureRunDto,
  FalsificationDto,
  HeuristicToggles,
} from './types';

/** Explorer state machine. Pure transitions; the view layer renders it and
 * the controller feeds API results back in. Conjectures are never reordered
 * or filtered here — displayed rank is server order. */

export interface ExplorerState {
  target: string;
  direction: 'upper' | 'lower';
  hypothesisFilter: string[];
  heuristics: HeuristicToggles;
  run: ConjectureRunDto | null;
  runPending: boolean;
  /** run no longer matches the database after a graph submission */
  stale: boolean;
  struck: Map<string, string>; // conjecture id -> reason shown inline
  draftEdgeList: string;
  draftId: string;
  submitError: string | null;
  apiError: string | null;
}

export const defaultHeuristics: HeuristicToggles = {
  sort: true,
  theo: true,
  dalmatian: true,
  known_filter: false,
};

export function initialState(): ExplorerState {
  return {
    target: 'independence_number',
    direction: 'upper',
    hypothesisFilter: [],
    heuristics: { ...defaultHeuristics },
    run: null,
    runPending: false,
    stale: false,
    struck: new Map(),
    draftEdgeList: '',
    draftId: '',
    submitError: null,
    apiError: null,
  };
}

export function buildRequest(state: ExplorerState): ConjectureRequest {
  const request: ConjectureRequest = {
    target: state.target,
    direction: state.direction,
    heuristics: { ...state.heuristics },
  };
  if (state.hypothesisFilter.length > 0) {
    request.hypothesis_filter = [...state.hypothesisFilter];
  }
  return request;
}

export function startRun(state: ExplorerState): ExplorerState {
  return { ...state, runPending: true, apiError: null };
}

export function finishRun(state: ExplorerState, run: ConjectureRunDto): ExplorerState {
  return {
    ...state,
    run,
    runPending: false,
    stale: false,
    struck: new Map(),
    apiError: null,
  };
}

export function failRun(state: ExplorerState, message: string): ExplorerState {
  return { ...state, runPending: false, apiError: message };
}

export function applyFalsification(
  state: ExplorerState,
  report: FalsificationDto,
): ExplorerState {
  const struck = new Map(state.struck);
  for (const entry of report.falsified) {
    struck.set(entry.conjecture_id, `falsified: ${entry.lhs} > ${entry.rhs}`);
  }
  return { ...state, struck, stale: true, submitError: null };
}

export function canSubmitGraph(state: ExplorerState): boolean {
  return !state.runPending && state.draftEdgeList.trim().length > 0;
}
