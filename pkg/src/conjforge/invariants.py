"""Exact computation of numerical graph invariants.

`compute` uses branch-and-bound / size-ordered search sized for desk-scale
graphs (n up to ~20 for the NP-hard entries). `brute_force_oracle` recomputes
the same values by exhaustive subset enumeration and exists for testing only.
All branching explores vertices in ascending index order so runs are
reproducible.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations

from .graph import Graph, is_connected


class InvariantDomainError(ValueError):
    """The invariant is undefined for this graph."""


class OracleCapError(ValueError):
    """Graph too large for the exhaustive oracle."""


INVARIANTS = (
    "order",
    "size",
    "min_degree",
    "max_degree",
    "diameter",
    "independence_number",
    "matching_number",
    "vertex_cover_number",
    "domination_number",
    "total_domination_number",
    "two_domination_number",
    "edge_domination_number",
    "zero_forcing_number",
    "total_zero_forcing_number",
)

INVARIANT_DESCRIPTIONS = {
    "order": "number of vertices",
    "size": "number of edges",
    "min_degree": "smallest vertex degree",
    "max_degree": "largest vertex degree",
    "diameter": "largest shortest-path distance",
    "independence_number": "maximum pairwise non-adjacent vertex set",
    "matching_number": "maximum pairwise non-incident edge set",
    "vertex_cover_number": "minimum vertex set meeting every edge",
    "domination_number": "minimum set with every outside vertex adjacent to it",
    "total_domination_number": "minimum set with every vertex adjacent to it",
    "two_domination_number": "minimum set giving every outside vertex two neighbors in it",
    "edge_domination_number": "minimum edge set adjacent to every other edge",
    "zero_forcing_number": "minimum blue set whose color-change closure is everything",
    "total_zero_forcing_number": "minimum zero forcing set inducing no isolated vertex",
}

# Invariants defined for any valid graph; the rest require connectivity.
_DEGREE_LIKE = {"order", "size", "min_degree", "max_degree"}


def forcing_closure(g: Graph, blue: frozenset[int] | set[int]) -> frozenset[int]:
    """Fixed point of the color-change rule: a blue vertex with exactly one
    non-blue neighbor forces that neighbor blue."""
    adj = g.adjacency()
    colored = set(blue)
    for v in colored:
        if not (0 <= v < g.n):
            raise InvariantDomainError(f"vertex {v} not in graph {g.id}")
    queue = deque(colored)
    while queue:
        u = queue.popleft()
        white = [w for w in adj[u] if w not in colored]
        if len(white) == 1:
            w = white[0]
            colored.add(w)
            queue.append(w)
            # neighbors of w may now be able to force
            queue.extend(x for x in adj[w] if x in colored)
            queue.append(u)
    return frozenset(colored)


def _diameter(g: Graph) -> int:
    adj = g.adjacency()
    best = 0
    for s in range(g.n):
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        if len(dist) != g.n:
            raise InvariantDomainError(f"diameter undefined: {g.id} is disconnected")
        best = max(best, max(dist.values()))
    return best


def _max_independent_set(adj: list[set[int]], n: int) -> int:
    best = 0

    def expand(candidates: list[int], current: int):
        nonlocal best
        if current + len(candidates) <= best:
            return
        if not candidates:
            best = max(best, current)
            return
        v = candidates[0]
        # branch: exclude v, then include v
        expand(candidates[1:], current)
        kept = [u for u in candidates[1:] if u not in adj[v]]
        expand(kept, current + 1)

    expand(list(range(n)), 0)
    return best


def _min_vertex_cover(g: Graph) -> int:
    adj = g.adjacency()
    edges = sorted(g.edges)
    best = [g.n]

    def expand(cover: set[int], idx: int):
        if len(cover) >= best[0]:
            return
        while idx < len(edges):
            u, v = edges[idx]
            if u in cover or v in cover:
                idx += 1
                continue
            break
        else:
            best[0] = len(cover)
            return
        u, v = edges[idx]
        expand(cover | {u}, idx + 1)
        expand(cover | {v}, idx + 1)

    expand(set(), 0)
    return best[0]


def _max_matching(g: Graph) -> int:
    adj = g.adjacency()
    best = [0]

    def expand(free: set[int], v: int, current: int):
        if current + len(free) // 2 <= best[0]:
            return
        while v < g.n and (v not in free or not (adj[v] & free)):
            v += 1
        if v == g.n:
            best[0] = max(best[0], current)
            return
        for u in sorted(adj[v] & free):
            expand(free - {v, u}, v + 1, current + 1)
        expand(free - {v}, v + 1, current)

    expand(set(range(g.n)), 0, 0)
    return best[0]


def _min_domination(g: Graph, total: bool) -> int:
    adj = g.adjacency()
    if total and any(not nbrs for nbrs in adj):
        raise InvariantDomainError(
            f"total_domination_number undefined: {g.id} has an isolated vertex"
        )
    best = [g.n + 1]

    def dominated(v: int, chosen: set[int]) -> bool:
        if not total and v in chosen:
            return True
        return bool(adj[v] & chosen)

    def expand(chosen: set[int]):
        if len(chosen) >= best[0]:
            return
        v = next((u for u in range(g.n) if not dominated(u, chosen)), None)
        if v is None:
            best[0] = len(chosen)
            return
        candidates = sorted(adj[v]) if total else sorted({v} | adj[v])
        for u in candidates:
            expand(chosen | {u})

    expand(set())
    return best[0]


def _min_subset_by_size(n: int, feasible) -> int:
    """Smallest k with a feasible k-subset of range(n); lexicographic scan."""
    for k in range(n + 1):
        for subset in combinations(range(n), k):
            if feasible(frozenset(subset)):
                return k
    raise InvariantDomainError("no feasible subset exists")


def _two_domination(g: Graph) -> int:
    adj = g.adjacency()

    def ok(s):
        return all(v in s or len(adj[v] & s) >= 2 for v in range(g.n))

    return _min_subset_by_size(g.n, ok)


def _edge_domination(g: Graph) -> int:
    edges = sorted(g.edges)
    m = len(edges)
    incident = [
        {j for j in range(m) if j != i and set(edges[i]) & set(edges[j])}
        for i in range(m)
    ]

    def ok(chosen):
        return all(i in chosen or (incident[i] & chosen) for i in range(m))

    for k in range(m + 1):
        for subset in combinations(range(m), k):
            if ok(frozenset(subset)):
                return k
    raise AssertionError("the full edge set always dominates")


def _zero_forcing(g: Graph, total: bool) -> int:
    if g.n == 0:
        raise InvariantDomainError("zero forcing undefined on the empty graph")
    adj = g.adjacency()

    def ok(s):
        if total:
            if not s or any(not (adj[v] & s) for v in s):
                return False
        return len(forcing_closure(g, s)) == g.n

    if total and g.n == 1:
        raise InvariantDomainError(
            f"total_zero_forcing_number undefined: {g.id} has an isolated vertex"
        )
    return _min_subset_by_size(g.n, ok)


def compute(g: Graph, inv: str) -> int:
    """Exact value of the named invariant."""
    if inv not in INVARIANTS:
        raise KeyError(f"unknown invariant {inv!r}")
    if inv == "order":
        return g.n
    if inv == "size":
        return g.size
    if inv in ("min_degree", "max_degree"):
        if g.n == 0:
            raise InvariantDomainError(f"{inv} undefined on the empty graph")
        degs = g.degrees()
        return min(degs) if inv == "min_degree" else max(degs)
    if not is_connected(g):
        raise InvariantDomainError(f"{inv} requires a connected graph ({g.id})")
    if inv == "diameter":
        return _diameter(g)
    if inv == "independence_number":
        return _max_independent_set(g.adjacency(), g.n)
    if inv == "matching_number":
        return _max_matching(g)
    if inv == "vertex_cover_number":
        return _min_vertex_cover(g)
    if inv == "domination_number":
        return _min_domination(g, total=False)
    if inv == "total_domination_number":
        return _min_domination(g, total=True)
    if inv == "two_domination_number":
        return _two_domination(g)
    if inv == "edge_domination_number":
        return _edge_domination(g)
    if inv == "zero_forcing_number":
        return _zero_forcing(g, total=False)
    if inv == "total_zero_forcing_number":
        return _zero_forcing(g, total=True)
    raise AssertionError(inv)


# ---------------------------------------------------------------------------
# Exhaustive oracle (tests only)
# ---------------------------------------------------------------------------

ORACLE_CAP = 12


def _closure_slow(adj: list[set[int]], blue: frozenset[int]) -> frozenset[int]:
    colored = set(blue)
    changed = True
    while changed:
        changed = False
        for u in list(colored):
            white = [w for w in adj[u] if w not in colored]
            if len(white) == 1:
                colored.add(white[0])
                changed = True
    return frozenset(colored)


def brute_force_oracle(g: Graph, inv: str, cap: int = ORACLE_CAP) -> int:
    """Recompute `inv` by exhaustive enumeration over all vertex (or edge)
    subsets. Independent of `compute`; intended for tests."""
    if inv not in INVARIANTS:
        raise KeyError(f"unknown invariant {inv!r}")
    if g.n > cap:
        raise OracleCapError(f"{g.id}: n={g.n} exceeds oracle cap {cap}")
    adj = g.adjacency()
    n = g.n
    vertex_subsets = lambda: (
        frozenset(i for i in range(n) if mask >> i & 1) for mask in range(1 << n)
    )

    if inv == "order":
        return n
    if inv == "size":
        return len(g.edges)
    if inv == "min_degree":
        if n == 0:
            raise InvariantDomainError("min_degree undefined on the empty graph")
        return min(len(adj[v]) for v in range(n))
    if inv == "max_degree":
        if n == 0:
            raise InvariantDomainError("max_degree undefined on the empty graph")
        return max(len(adj[v]) for v in range(n))
    if inv == "diameter":
        # Floyd-Warshall, independent of the BFS route in compute
        INF = n + 1
        dist = [[0 if i == j else INF for j in range(n)] for i in range(n)]
        for u, v in g.edges:
            dist[u][v] = dist[v][u] = 1
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    if dist[i][k] + dist[k][j] < dist[i][j]:
                        dist[i][j] = dist[i][k] + dist[k][j]
        worst = max(dist[i][j] for i in range(n) for j in range(n))
        if worst >= INF:
            raise InvariantDomainError("diameter undefined: disconnected")
        return worst

    if inv == "independence_number":
        return max(
            len(s)
            for s in vertex_subsets()
            if all(u not in s or v not in s for u, v in g.edges)
        )
    if inv == "vertex_cover_number":
        return min(
            len(s)
            for s in vertex_subsets()
            if all(u in s or v in s for u, v in g.edges)
        )
    if inv == "domination_number":
        return min(
            len(s)
            for s in vertex_subsets()
            if all(v in s or adj[v] & s for v in range(n))
        )
    if inv == "total_domination_number":
        feasible = [len(s) for s in vertex_subsets() if all(adj[v] & s for v in range(n))]
        if not feasible:
            raise InvariantDomainError("total domination undefined: isolated vertex")
        return min(feasible)
    if inv == "two_domination_number":
        return min(
            len(s)
            for s in vertex_subsets()
            if all(v in s or len(adj[v] & s) >= 2 for v in range(n))
        )
    if inv == "zero_forcing_number":
        return min(
            len(s) for s in vertex_subsets() if len(_closure_slow(adj, s)) == n
        )
    if inv == "total_zero_forcing_number":
        feasible = [
            len(s)
            for s in vertex_subsets()
            if s
            and all(adj[v] & s for v in s)
            and len(_closure_slow(adj, s)) == n
        ]
        if not feasible:
            raise InvariantDomainError("total zero forcing undefined: isolated vertex")
        return min(feasible)

    edges = sorted(g.edges)
    m = len(edges)
    if inv == "matching_number":
        for k in range(n // 2, -1, -1):
            for chosen in combinations(edges, k):
                used = [v for e in chosen for v in e]
                if len(used) == len(set(used)):
                    return k
        return 0
    if inv == "edge_domination_number":
        for k in range(m + 1):
            for chosen in combinations(range(m), k):
                cs = set(chosen)
                if all(
                    i in cs or any(set(edges[i]) & set(edges[j]) for j in cs)
                    for i in range(m)
                ):
                    return k
    raise AssertionError(inv)
