import type { ExplorerState } from './state';
import type { ConjectureDto, FilterReportDto } from './types';
import { previewEdgeList } from './validate';

function el(tag: string, className?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function witnessDetails(c: ConjectureDto, report: FilterReportDto): HTMLElement {
  const details = el('div', 'witnesses');
  details.appendChild(
    el('p', 'witness-list', `equality witnesses: ${c.equality_set.join(', ')}`),
  );
  const nearby = report.removed.filter((r) => r.reason.includes(c.id));
  for (const r of nearby) {
    details.appendChild(el('p', 'suppressed', `suppressed ${r.id}: ${r.reason}`));
  }
  return details;
}

/** Conjecture table in server order: rank equals array position + 1. */
export function renderConjectureTable(state: ExplorerState): HTMLElement {
  const container = el('section', 'results');
  if (state.apiError) {
    container.appendChild(el('div', 'error-banner', state.apiError));
  }
  if (!state.run) {
    container.appendChild(el('p', 'empty-state', 'Pick a target and generate.'));
    return container;
  }
  if (state.stale) {
    container.appendChild(
      el('div', 'stale-banner', 'Database changed — regenerate to refresh this run.'),
    );
  }
  if (state.run.conjectures.length === 0) {
    container.appendChild(
      el('p', 'empty-state', 'No conjectures survived; try relaxing the hypothesis.'),
    );
    return container;
  }
  const table = el('table', 'conjectures') as HTMLTableElement;
  const head = table.createTHead().insertRow();
  for (const label of ['rank', 'statement', 'touch', 'hypothesis']) {
    head.appendChild(el('th', undefined, label));
  }
  const body = table.createTBody();
  state.run.conjectures.forEach((c, i) => {
    const row = body.insertRow();
    row.dataset.conjectureId = c.id;
    const strikeReason = state.struck.get(c.id);
    if (strikeReason !== undefined) {
      row.classList.add('struck');
      row.title = strikeReason;
    }
    row.insertCell().textContent = String(i + 1);
    const statementCell = row.insertCell();
    statementCell.textContent = c.statement;
    if (strikeReason !== undefined) {
      statementCell.appendChild(el('span', 'strike-reason', ` (${strikeReason})`));
    }
    row.insertCell().textContent = String(c.touch_number);
    row.insertCell().textContent = c.hypothesis.join(' and ');
    row.addEventListener('click', () => {
      const existing = row.nextElementSibling;
      if (existing?.classList.contains('detail-row')) {
        existing.remove();
        return;
      }
      const detail = body.insertRow(row.rowIndex);
      detail.classList.add('detail-row');
      detail.insertCell().colSpan = 4;
      detail.cells[0].appendChild(witnessDetails(c, state.run!.filter_report));
    });
  });
  container.appendChild(table);
  return container;
}

export function renderDraftPreview(edgeList: string): HTMLElement {
  const preview = previewEdgeList(edgeList);
  const box = el('div', preview.ok ? 'preview ok' : 'preview invalid');
  box.appendChild(
    el('span', 'counts', `${preview.vertexCount} vertices, ${preview.edgeCount} edges`),
  );
  for (const message of preview.errors) {
    box.appendChild(el('p', 'preview-error', message));
  }
  return box;
}

export function renderSubmitError(message: string | null): HTMLElement {
  return el('p', 'submit-error', message ?? '');
}
