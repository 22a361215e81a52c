"""Graph families with closed-form mixed metric dimension."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, build_graph


class BadParameter(ValueError):
    pass


class NotATree(ValueError):
    pass


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class CompleteBipartite:
    r: int
    t: int


@dataclass(frozen=True)
class Grid:
    """``P_r x P_t``; vertex ``(x, y)`` has index ``x * t + y``."""

    r: int
    t: int


@dataclass(frozen=True)
class Tree:
    n: int
    edges: tuple[tuple[int, int], ...]


FamilySpec = Path | Cycle | Complete | CompleteBipartite | Grid | Tree


def _check(f: FamilySpec) -> None:
    if isinstance(f, Path) and f.n < 2:
        raise BadParameter(f"path needs n >= 2, got {f.n}")
    if isinstance(f, Cycle) and f.n < 3:
        raise BadParameter(f"cycle needs n >= 3, got {f.n}")
    if isinstance(f, Complete) and f.n < 2:
        raise BadParameter(f"complete graph needs n >= 2, got {f.n}")
    if isinstance(f, (CompleteBipartite, Grid)) and (f.r < 2 or f.t < 2):
        raise BadParameter(f"{type(f).__name__} needs r, t >= 2, got {f.r}, {f.t}")
    if isinstance(f, Tree):
        if f.n < 2:
            raise BadParameter(f"tree needs n >= 2, got {f.n}")
        if len(f.edges) != f.n - 1:
            raise NotATree(f"{len(f.edges)} edges on {f.n} vertices")


def build_family(f: FamilySpec) -> Graph:
    _check(f)
    if isinstance(f, Path):
        edges = [(i, i + 1) for i in range(f.n - 1)]
        return build_graph(f.n, edges)
    if isinstance(f, Cycle):
        return build_graph(f.n, [(i, (i + 1) % f.n) for i in range(f.n)])
    if isinstance(f, Complete):
        return build_graph(f.n, itertools.combinations(range(f.n), 2))
    if isinstance(f, CompleteBipartite):
        return build_graph(f.r + f.t, [(u, f.r + v) for u in range(f.r) for v in range(f.t)])
    if isinstance(f, Grid):
        edges = []
        for x in range(f.r):
            for y in range(f.t):
                if x + 1 < f.r:
                    edges.append((x * f.t + y, (x + 1) * f.t + y))
                if y + 1 < f.t:
                    edges.append((x * f.t + y, x * f.t + y + 1))
        return build_graph(f.r * f.t, edges)
    if isinstance(f, Tree):
        try:
            return build_graph(f.n, f.edges)
        except GraphError as exc:
            # n - 1 edges and connected is exactly a tree
            raise NotATree(str(exc)) from exc
    raise BadParameter(f"unknown family {f!r}")


def family_mdim(f: FamilySpec) -> int:
    """Closed-form mixed metric dimension of a family member.

    ``Cycle(3)`` is the triangle and takes the complete-graph value 3.
    """
    _check(f)
    if isinstance(f, Path):
        return 2
    if isinstance(f, Cycle):
        return 3
    if isinstance(f, Complete):
        return f.n
    if isinstance(f, CompleteBipartite):
        return f.r + f.t - 1 if min(f.r, f.t) == 2 else f.r + f.t - 2
    if isinstance(f, Grid):
        return 3
    if isinstance(f, Tree):
        g = build_family(f)
        return sum(1 for v in range(g.n) if g.degree(v) == 1)
    raise BadParameter(f"unknown family {f!r}")


def family_note(f: FamilySpec) -> str | None:
    if isinstance(f, Cycle) and f.n == 3:
        return "C_3 is K_3; the cycle formula covers n >= 4, the complete-graph value n = 3 applies"
    return None


def grid_generator(r: int, t: int) -> tuple[int, int, int]:
    """Corners ``(0,0), (0,t-1), (r-1,0)`` of the grid as vertex indices."""
    return (0, t - 1, (r - 1) * t)


def cycle_generator(n: int) -> tuple[int, int, int]:
    return (0, 1, -(-n // 2))


def parse_family(text: str, tree_loader=None) -> FamilySpec:
    """Parse ``path:5``, ``cycle:6``, ``complete:5``, ``kb:3,4``, ``grid:3,4``, ``tree:@file``."""
    name, sep, arg = text.partition(":")
    if not sep or not arg:
        raise BadParameter(f"expected <family>:<params>, got {text!r}")
    name = name.strip().lower()
    if name == "tree":
        if not arg.startswith("@"):
            raise BadParameter("tree family takes tree:@path.edges")
        if tree_loader is None:
            raise BadParameter("no loader for tree files")
        g_n, g_edges = tree_loader(arg[1:])
        return Tree(g_n, tuple(g_edges))
    try:
        params = [int(x) for x in arg.split(",")]
    except ValueError:
        raise BadParameter(f"non-integer parameter in {text!r}") from None
    one = {"path": Path, "cycle": Cycle, "complete": Complete}
    two = {"kb": CompleteBipartite, "grid": Grid}
    if name in one and len(params) == 1:
        return one[name](params[0])
    if name in two and len(params) == 2:
        return two[name](*params)
    raise BadParameter(f"unknown family or wrong arity: {text!r}")


def family_text(f: FamilySpec) -> str:
    if isinstance(f, Path):
        return f"path:{f.n}"
    if isinstance(f, Cycle):
        return f"cycle:{f.n}"
    if isinstance(f, Complete):
        return f"complete:{f.n}"
    if isinstance(f, CompleteBipartite):
        return f"kb:{f.r},{f.t}"
    if isinstance(f, Grid):
        return f"grid:{f.r},{f.t}"
    return f"tree:{f.n}"


def prufer_tree(seq: Sequence[int]) -> Tree:
    """Tree on ``len(seq) + 2`` vertices decoded from a Prüfer sequence."""
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise BadParameter(f"Prüfer entry {x} outside 0..{n - 1}")
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return Tree(n, tuple(sorted((min(a, b), max(a, b)) for a, b in edges)))


def random_tree(n: int, rng) -> Tree:
    """Uniform random labelled tree via a Prüfer sequence from ``rng`` (``random.Random``)."""
    if n < 2:
        raise BadParameter(f"tree needs n >= 2, got {n}")
    return prufer_tree([rng.randrange(n) for _ in range(n - 2)])
