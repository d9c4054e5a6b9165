import { ApiClient, ApiError } from './api';
import {
  applyFalsification,
  buildRequest,
  canSubmitGraph,
  failRun,
  finishRun,
  initialState,
  startRun,
  type ExplorerState,
} from './state';
import { renderConjectureTable, renderDraftPreview, renderSubmitError } from './view';

const apiBase =
  new URLSearchParams(window.location.search).get('api') ?? 'http://localhost:8080';
const client = new ApiClient(apiBase);

let state: ExplorerState = initialState();

function setState(next: ExplorerState) {
  state = next;
  render();
}

async function generate() {
  if (state.runPending) return; // single in-flight request
  setState(startRun(state));
  try {
    const run = await client.requestConjectures(buildRequest(state));
    setState(finishRun(state, run));
  } catch (err) {
    const message = err instanceof ApiError ? err.message : 'API unreachable';
    setState(failRun(state, message));
  }
}

async function submitCounterexample() {
  if (!canSubmitGraph(state)) return;
  try {
    const report = await client.submitGraph(state.draftId, state.draftEdgeList);
    setState(applyFalsification(state, report));
  } catch (err) {
    const message = err instanceof ApiError ? err.message : 'submission failed';
    setState({ ...state, submitError: message });
  }
}

function controlPanel(): HTMLElement {
  const panel = document.createElement('aside');
  panel.className = 'controls';

  const targetSelect = document.createElement('select');
  targetSelect.id = 'target';
  const directionSelect = document.createElement('select');
  directionSelect.id = 'direction';
  for (const d of ['upper', 'lower']) {
    const opt = document.createElement('option');
    opt.value = d;
    opt.textContent = d;
    directionSelect.appendChild(opt);
  }
  directionSelect.value = state.direction;
  directionSelect.onchange = () => {
    state.direction = directionSelect.value as 'upper' | 'lower';
  };
  targetSelect.onchange = () => {
    state.target = targetSelect.value;
  };
  client.listInvariants().then((descriptors) => {
    for (const d of descriptors.filter((x) => x.kind === 'numeric')) {
      const opt = document.createElement('option');
      opt.value = d.name;
      opt.textContent = d.name;
      opt.title = d.description;
      targetSelect.appendChild(opt);
    }
    targetSelect.value = state.target;
  });

  const toggles = document.createElement('div');
  toggles.className = 'toggles';
  for (const key of ['theo', 'dalmatian'] as const) {
    const label = document.createElement('label');
    const box = document.createElement('input');
    box.type = 'checkbox';
    box.checked = state.heuristics[key];
    box.onchange = () => {
      state.heuristics[key] = box.checked;
    };
    label.append(box, key);
    toggles.appendChild(label);
  }

  const goButton = document.createElement('button');
  goButton.id = 'generate';
  goButton.textContent = state.runPending ? 'generating…' : 'generate';
  goButton.disabled = state.runPending;
  goButton.onclick = generate;

  panel.append(targetSelect, directionSelect, toggles, goButton);
  panel.appendChild(counterexampleForm());
  return panel;
}

function counterexampleForm(): HTMLElement {
  const form = document.createElement('div');
  form.className = 'counterexample';

  const idInput = document.createElement('input');
  idInput.placeholder = 'graph id';
  idInput.value = state.draftId;
  idInput.oninput = () => {
    state.draftId = idInput.value;
  };

  const textarea = document.createElement('textarea');
  textarea.placeholder = 'edge list, one "u v" per line';
  textarea.value = state.draftEdgeList;
  const previewSlot = document.createElement('div');
  previewSlot.id = 'preview';
  textarea.oninput = () => {
    state.draftEdgeList = textarea.value;
    previewSlot.replaceChildren(renderDraftPreview(textarea.value));
  };

  const submit = document.createElement('button');
  submit.id = 'submit-graph';
  submit.textContent = 'submit counterexample';
  submit.disabled = !canSubmitGraph(state);
  submit.onclick = submitCounterexample;

  form.append(idInput, textarea, previewSlot, submit, renderSubmitError(state.submitError));
  return form;
}

function render() {
  const root = document.getElementById('app');
  if (!root) return;
  root.replaceChildren(controlPanel(), renderConjectureTable(state));
}

render();
