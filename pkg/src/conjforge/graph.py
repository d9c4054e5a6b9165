"""Simple undirected graphs: parsing, serialization, and Boolean predicates.

Graphs are immutable once constructed. Vertices are always 0..n-1; edge-list
files with arbitrary labels are compacted on parse.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations


class GraphParseError(ValueError):
    """Raised when an edge-list file is malformed."""


class GraphValidationError(ValueError):
    """Raised when edge data violates the simple-graph invariants."""


BOOLEAN_PROPERTIES = (
    "connected",
    "bipartite",
    "tree",
    "regular",
    "cubic",
    "subcubic",
    "claw_free",
    "triangle_free",
    "eulerian",
    "has_leaf",
)

BOOLEAN_DESCRIPTIONS = {
    "connected": "every vertex reachable from every other",
    "bipartite": "vertices 2-colorable with no monochromatic edge",
    "tree": "connected with exactly n-1 edges",
    "regular": "all degrees equal some r > 0",
    "cubic": "3-regular",
    "subcubic": "maximum degree at most 3",
    "claw_free": "no induced K_{1,3}",
    "triangle_free": "no three mutually adjacent vertices",
    "eulerian": "connected and every degree even",
    "has_leaf": "minimum degree equals 1",
}


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus a set of unordered pairs."""

    id: str
    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphValidationError(f"{self.id}: negative vertex count")
        seen = set()
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphValidationError(f"{self.id}: self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphValidationError(
                    f"{self.id}: edge ({u}, {v}) has endpoint outside 0..{self.n - 1}"
                )
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphValidationError(f"{self.id}: duplicate edge {key}")
            seen.add(key)
            norm.add(key)
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def size(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency()]


def parse_edge_list(text: str, graph_id: str = "g") -> Graph:
    """Parse the edge-list format: one `u v` pair per line, `#` comments,
    optional `n=<count>` header for isolated vertices.

    Labels may be arbitrary strings; they are compacted to 0..n-1 in
    first-appearance order.
    """
    declared_n = None
    raw_edges: list[tuple[str, str]] = []
    labels: dict[str, int] = {}
    first_content = True
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if first_content and stripped.startswith("n="):
            try:
                declared_n = int(stripped[2:])
            except ValueError:
                raise GraphParseError(f"line {lineno}: bad vertex count {stripped!r}")
            if declared_n < 0:
                raise GraphParseError(f"line {lineno}: negative vertex count")
            first_content = False
            continue
        first_content = False
        parts = stripped.split()
        if len(parts) != 2:
            raise GraphParseError(
                f"line {lineno}: expected `<u> <v>`, got {stripped!r}"
            )
        raw_edges.append((parts[0], parts[1]))
        for label in parts:
            if label not in labels:
                labels[label] = len(labels)

    n = len(labels) if declared_n is None else declared_n
    if declared_n is not None and len(labels) > declared_n:
        raise GraphParseError(
            f"edge list names {len(labels)} vertices but header declares n={declared_n}"
        )
    if declared_n is not None and all(
        label.isdigit() and int(label) < declared_n for label in labels
    ):
        # literal 0..n-1 labels under an explicit header are kept as-is so the
        # canonical serializer round-trips exactly
        labels = {label: int(label) for label in labels}
    edges = frozenset((labels[a], labels[b]) for a, b in raw_edges)
    if len(edges) != len(raw_edges):
        # find the offender for the message
        seen = set()
        for a, b in raw_edges:
            key = (min(labels[a], labels[b]), max(labels[a], labels[b]))
            if key in seen:
                raise GraphValidationError(f"duplicate edge {a} {b}")
            seen.add(key)
    return Graph(id=graph_id, n=n, edges=edges)


def serialize_edge_list(g: Graph) -> str:
    """Canonical edge-list text; inverse of parse_edge_list up to labeling."""
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise GraphValidationError("connectivity undefined on the empty graph")
    if g.n == 1:
        return True
    adj = g.adjacency()
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == g.n


def _is_bipartite(g: Graph) -> bool:
    adj = g.adjacency()
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def _is_claw_free(g: Graph) -> bool:
    adj = g.adjacency()
    for v in range(g.n):
        nbrs = sorted(adj[v])
        if len(nbrs) < 3:
            continue
        for a, b, c in combinations(nbrs, 3):
            if b not in adj[a] and c not in adj[a] and c not in adj[b]:
                return False
    return True


def _is_triangle_free(g: Graph) -> bool:
    adj = g.adjacency()
    for u, v in g.edges:
        if adj[u] & adj[v]:
            return False
    return True


def evaluate_boolean(g: Graph, prop: str) -> bool:
    """Evaluate one of the BOOLEAN_PROPERTIES predicates on g."""
    if prop not in BOOLEAN_PROPERTIES:
        raise KeyError(f"unknown boolean property {prop!r}")
    degs = g.degrees()
    if prop == "connected":
        return is_connected(g)
    if prop == "bipartite":
        return _is_bipartite(g)
    if prop == "tree":
        return g.n >= 1 and g.size == g.n - 1 and is_connected(g)
    if prop == "regular":
        return g.n > 0 and degs[0] > 0 and all(d == degs[0] for d in degs)
    if prop == "cubic":
        return g.n > 0 and all(d == 3 for d in degs)
    if prop == "subcubic":
        return all(d <= 3 for d in degs)
    if prop == "claw_free":
        return _is_claw_free(g)
    if prop == "triangle_free":
        return _is_triangle_free(g)
    if prop == "eulerian":
        return is_connected(g) and all(d % 2 == 0 for d in degs)
    if prop == "has_leaf":
        return g.n > 0 and min(degs) == 1
    raise AssertionError(prop)
