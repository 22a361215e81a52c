"""All connected graphs of small order, one per isomorphism class.

Every connected graph has a vertex whose removal keeps it connected (a leaf
of any spanning tree), so order-``n`` classes arise from order-``n-1``
classes by adding a vertex joined to a nonempty subset.  Candidates are
deduplicated by a canonical form: the lexicographically largest adjacency
bit string over all vertex relabellings.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .graph import Graph, build_graph


def _canonical(n: int, edges: frozenset[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    adj = [[False] * n for _ in range(n)]
    for u, v in edges:
        adj[u][v] = adj[v][u] = True
    pairs = list(itertools.combinations(range(n), 2))
    degrees = [sum(row) for row in adj]
    best = None
    best_perm = None
    # only relabellings that sort vertices by non-increasing degree
    groups = [sorted((v for v in range(n) if degrees[v] == d)) for d in sorted(set(degrees), reverse=True)]
    for parts in itertools.product(*(itertools.permutations(gr) for gr in groups)):
        order = [v for part in parts for v in part]
        key = tuple(adj[order[i]][order[j]] for i, j in pairs)
        if best is None or key > best:
            best, best_perm = key, order
    pos = {v: i for i, v in enumerate(best_perm)}
    return tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in edges))


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """Connected graphs on ``n >= 2`` vertices up to isomorphism, in canonical form."""
    if n < 2:
        raise ValueError("order must be at least 2")
    if n == 2:
        return (build_graph(2, [(0, 1)]),)
    seen: set[tuple[tuple[int, int], ...]] = set()
    for h in connected_graphs(n - 1):
        for k in range(1, n):
            for nbrs in itertools.combinations(range(n - 1), k):
                edges = frozenset(h.edges) | {(u, n - 1) for u in nbrs}
                seen.add(_canonical(n, edges))
    return tuple(build_graph(n, es) for es in sorted(seen))


def all_connected_graphs(max_n: int, min_n: int = 2) -> list[Graph]:
    out: list[Graph] = []
    for n in range(min_n, max_n + 1):
        out.extend(connected_graphs(n))
    return out


def is_path(g: Graph) -> bool:
    degrees = sorted(g.degree(v) for v in range(g.n))
    return g.m == g.n - 1 and degrees[-1] <= 2
