/** Client-side edge-list preview: catches malformed counterexamples before a
 * round trip. Mirrors the server format (one `u v` per line, `#` comments,
 * optional leading `n=<count>`), but the server remains the authority. */

export interface EdgeListPreview {
  ok: boolean;
  vertexCount: number;
  edgeCount: number;
  errors: string[];
}

export function previewEdgeList(text: string): EdgeListPreview {
  const labels = new Set<string>();
  const edges = new Set<string>();
  const errors: string[] = [];
  let declaredN: number | null = null;
  let firstContent = true;

  const lines = text.split('\n');
  for (let i = 0; i < lines.length; i++) {
    const line = lines[i].trim();
    if (line === '' || line.startsWith('#')) continue;
    if (firstContent && line.startsWith('n=')) {
      const n = Number(line.slice(2));
      if (!Number.isInteger(n) || n < 0) {
        errors.push(`line ${i + 1}: bad vertex count ${line}`);
      } else {
        declaredN = n;
      }
      firstContent = false;
      continue;
    }
    firstContent = false;
    const parts = line.split(/\s+/);
    if (parts.length !== 2) {
      errors.push(`line ${i + 1}: expected two labels, got "${line}"`);
      continue;
    }
    const [u, v] = parts;
    if (u === v) {
      errors.push(`line ${i + 1}: self-loop at ${u}`);
      continue;
    }
    const key = u < v ? `${u}|${v}` : `${v}|${u}`;
    if (edges.has(key)) {
      errors.push(`line ${i + 1}: duplicate edge ${u} ${v}`);
      continue;
    }
    edges.add(key);
    labels.add(u);
    labels.add(v);
  }

  const vertexCount = declaredN ?? labels.size;
  if (declaredN !== null && labels.size > declaredN) {
    errors.push(`edge list names ${labels.size} vertices but header declares n=${declaredN}`);
  }
  if (edges.size === 0 && vertexCount === 0) {
    errors.push('edge list is empty');
  }
  return {
    ok: errors.length === 0,
    vertexCount,
    edgeCount: edges.size,
    errors,
  };
}
