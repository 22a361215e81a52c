"""Canonical graph representation and distance computations.

Vertices are dense indices ``0..n-1``.  Edges are stored once, as ``(u, v)``
with ``u < v``, sorted lexicographically; an edge's position in that list is
its identity.  Elements (the union of vertices and edges) are totally ordered
with all vertices first, then all edges, which fixes the column order of the
vertex-to-element distance matrix.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path


class GraphError(ValueError):
    """Base class for rejected graph input."""


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class TooSmall(GraphError):
    pass


class IndexOutOfRange(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """A simple connected undirected graph on vertices ``0..n-1``.

    Build instances with :func:`build_graph`; the constructor itself trusts
    its arguments.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def num_elements(self) -> int:
        return self.n + len(self.edges)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: k for k, e in enumerate(self.edges)}

    @cached_property
    def neighbour_masks(self) -> tuple[int, ...]:
        """Open neighbourhoods as integer bitsets."""
        masks = []
        for nbrs in self.adjacency:
            mask = 0
            for u in nbrs:
                mask |= 1 << u
            masks.append(mask)
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_index

    def element(self, index: int) -> "Element":
        """Element at position ``index`` of the total element order."""
        if 0 <= index < self.n:
            return Vertex(index)
        if self.n <= index < self.num_elements:
            return Edge(index - self.n)
        raise IndexOutOfRange(f"element index {index} outside 0..{self.num_elements - 1}")

    def element_position(self, x: "Element") -> int:
        if isinstance(x, Vertex):
            if not 0 <= x.i < self.n:
                raise IndexOutOfRange(f"vertex {x.i} outside 0..{self.n - 1}")
            return x.i
        if not 0 <= x.k < self.m:
            raise IndexOutOfRange(f"edge index {x.k} outside 0..{self.m - 1}")
        return self.n + x.k

    def edge_element(self, u: int, v: int) -> "Edge":
        key = (min(u, v), max(u, v))
        try:
            return Edge(self.edge_index[key])
        except KeyError:
            raise IndexOutOfRange(f"no edge {key}") from None

    def element_label(self, x: "Element") -> str:
        """Short notation: ``v3`` for a vertex, ``e(2,5)`` for an edge."""
        if isinstance(x, Vertex):
            return f"v{x.i}"
        u, v = self.edges[x.k]
        return f"e({u},{v})"


@dataclass(frozen=True)
class Vertex:
    i: int


@dataclass(frozen=True)
class Edge:
    """An edge, by its index into ``Graph.edges``."""

    k: int


Element = Vertex | Edge


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate and canonicalize an edge list into a :class:`Graph`.

    Raises one of the :class:`GraphError` subclasses naming the offending
    vertex or edge.
    """
    if n < 2:
        raise TooSmall(f"graph needs at least 2 vertices, got n={n}")
    seen: set[tuple[int, int]] = set()
    for pair in edges:
        u, v = (int(x) for x in pair)
        for x in (u, v):
            if not 0 <= x < n:
                raise IndexOutOfRange(f"edge ({u},{v}) references vertex {x} outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"edge {key} listed more than once")
        seen.add(key)
    canon = tuple(sorted(seen))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in canon:
        adj[u].append(v)
        adj[v].append(u)
    adjacency = tuple(tuple(sorted(a)) for a in adj)

    reached = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adjacency[x]:
            if y not in reached:
                reached.add(y)
                queue.append(y)
    if len(reached) != n:
        missing = min(set(range(n)) - reached)
        raise Disconnected(f"vertex {missing} is not reachable from vertex 0")
    return Graph(n=n, edges=canon, adjacency=adjacency)


@dataclass(frozen=True, eq=False)
class DistanceTable:
    """Vertex-to-vertex and vertex-to-edge hop distances.

    ``vv[i, j]`` is the distance between vertices ``i`` and ``j``;
    ``ve[i, k]`` is ``min(vv[i, u], vv[i, v])`` for edge ``k = (u, v)``.
    ``matrix`` is the ``n x (n + m)`` concatenation ``[vv | ve]``.
    """

    graph: Graph
    vv: np.ndarray
    ve: np.ndarray

    @cached_property
    def matrix(self) -> np.ndarray:
        out = np.concatenate([self.vv, self.ve], axis=1)
        out.flags.writeable = False
        return out

    def distance(self, w: int, x: Element) -> int:
        """Distance from vertex ``w`` to element ``x``."""
        if isinstance(x, Vertex):
            return int(self.vv[w, x.i])
        return int(self.ve[w, x.k])


def all_pairs_distances(g: Graph) -> DistanceTable:
    if g.m:
        rows, cols = zip(*g.edges)
    else:
        rows, cols = (), ()
    adj = csr_matrix((np.ones(g.m), (rows, cols)), shape=(g.n, g.n))
    dist = shortest_path(adj, method="D", directed=False, unweighted=True)
    vv = dist.astype(np.int64)
    if g.m:
        ends = np.asarray(g.edges, dtype=np.int64)
        ve = np.minimum(vv[:, ends[:, 0]], vv[:, ends[:, 1]])
    else:
        ve = np.zeros((g.n, 0), dtype=np.int64)
    vv.flags.writeable = False
    ve.flags.writeable = False
    return DistanceTable(graph=g, vv=vv, ve=ve)


class Acyclic:
    """Marker returned by :func:`girth` for forests."""

    _instance: "Acyclic | None" = None

    def __new__(cls) -> "Acyclic":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ACYCLIC"


ACYCLIC = Acyclic()


def shortest_cycle(g: Graph) -> list[int] | None:
    """Vertices of a shortest cycle in traversal order, or ``None``.

    For each edge ``(u, v)``, a BFS from ``u`` that may not use that edge
    finds the shortest cycle through it.  Ties resolve to the cycle found
    first in edge order.
    """
    best: list[int] | None = None
    for u, v in g.edges:
        limit = None if best is None else len(best) - 1
        path = _bfs_path_avoiding(g, u, v, limit)
        if path is not None and (best is None or len(path) < len(best)):
            best = path
            if len(best) == 3:
                break
    return best


def _bfs_path_avoiding(g: Graph, src: int, dst: int, limit: int | None) -> list[int] | None:
    # shortest src->dst path not using the edge (src, dst); None if longer than limit hops
    parent = {src: -1}
    depth = {src: 0}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if limit is not None and depth[x] >= limit:
            continue
        for y in g.adjacency[x]:
            if x == src and y == dst:
                continue
            if y in parent:
                continue
            parent[y] = x
            depth[y] = depth[x] + 1
            if y == dst:
                path = [y]
                while parent[path[-1]] != -1:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(y)
    return None


def girth(g: Graph) -> int | Acyclic:
    cycle = shortest_cycle(g)
    return ACYCLIC if cycle is None else len(cycle)
