"""Distinguishing predicates, generator verification and structural certificates."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .graph import DistanceTable, Element, Graph, IndexOutOfRange, all_pairs_distances


class Variant(enum.Enum):
    """Which element pairs a vertex set has to tell apart."""

    DIM = "dim"  # vertex pairs
    EDIM = "edim"  # edge pairs
    MDIM = "mdim"  # all element pairs

    def columns(self, g: Graph) -> range:
        """Positions, in the element order, of the elements this variant covers."""
        if self is Variant.DIM:
            return range(g.n)
        if self is Variant.EDIM:
            return range(g.n, g.num_elements)
        return range(g.num_elements)


class EmptySet(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorCertificate:
    """Outcome of checking a vertex set against one variant.

    ``failing_pair`` is ``None`` exactly when ``valid`` is true; otherwise it
    holds the first undistinguished pair ``(x, y)`` with ``x`` before ``y``
    in the element order, and no earlier pair fails.
    """

    variant: Variant
    vertices: tuple[int, ...]
    valid: bool
    failing_pair: tuple[Element, Element] | None = None


def distinguishes(t: DistanceTable, w: int, x: Element, y: Element) -> bool:
    return t.distance(w, x) != t.distance(w, y)


def _check_vertex_set(g: Graph, S: Iterable[int]) -> tuple[int, ...]:
    verts = tuple(sorted(set(int(v) for v in S)))
    if not verts:
        raise EmptySet("vertex set must be nonempty")
    for v in verts:
        if not 0 <= v < g.n:
            raise IndexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    return verts


def verify_generator(t: DistanceTable, S: Iterable[int], variant: Variant) -> GeneratorCertificate:
    g = t.graph
    verts = _check_vertex_set(g, S)
    cols = variant.columns(g)
    if len(cols) < 2:
        return GeneratorCertificate(variant, verts, True)
    # one row per element: its distance vector to S
    vectors = t.matrix[np.asarray(verts)][:, cols.start:cols.stop].T
    _, inverse, counts = np.unique(vectors, axis=0, return_inverse=True, return_counts=True)
    inverse = inverse.reshape(-1)
    clashing = np.flatnonzero(counts[inverse] > 1)
    if clashing.size == 0:
        return GeneratorCertificate(variant, verts, True)
    first = int(clashing[0])
    partner = int(np.flatnonzero(inverse == inverse[first])[1])
    pair = (g.element(cols.start + first), g.element(cols.start + partner))
    return GeneratorCertificate(variant, verts, False, pair)


def is_generator(t: DistanceTable, S: Iterable[int], variant: Variant) -> bool:
    return verify_generator(t, S, variant).valid


@dataclass(frozen=True)
class StructuralReport:
    true_twin_classes: tuple[tuple[int, ...], ...]
    false_twin_classes: tuple[tuple[int, ...], ...]
    extreme_vertices: tuple[int, ...]
    degree_one_vertices: tuple[int, ...]
    maximal_neighbour_map: tuple[tuple[int, ...], ...]
    forced_vertices: tuple[int, ...]


def _classes(keys: list[int]) -> tuple[tuple[int, ...], ...]:
    cells: dict[int, list[int]] = {}
    for v, key in enumerate(keys):
        cells.setdefault(key, []).append(v)
    return tuple(sorted(tuple(c) for c in cells.values() if len(c) >= 2))


def _is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def maximal_neighbours(g: Graph, v: int) -> tuple[int, ...]:
    """Neighbours ``u`` of ``v`` whose closed neighbourhood contains ``N[v]``."""
    nbr = g.neighbour_masks
    closed_v = nbr[v] | 1 << v
    return tuple(u for u in g.adjacency[v] if _is_subset(closed_v, nbr[u] | 1 << u))


def is_extreme(g: Graph, v: int) -> bool:
    """True when the open neighbourhood of ``v`` induces a complete graph."""
    nbr = g.neighbour_masks
    return all(_is_subset(nbr[v] & ~(1 << u), nbr[u]) for u in g.adjacency[v])


def structural_report(g: Graph) -> StructuralReport:
    nbr = g.neighbour_masks
    true_twins = _classes([nbr[v] | 1 << v for v in range(g.n)])
    false_twins = _classes(list(nbr))
    extreme = tuple(v for v in range(g.n) if is_extreme(g, v))
    leaves = tuple(v for v in range(g.n) if g.degree(v) == 1)
    forced = set(extreme)
    for cell in true_twins:
        forced.update(cell)
    return StructuralReport(
        true_twin_classes=true_twins,
        false_twin_classes=false_twins,
        extreme_vertices=extreme,
        degree_one_vertices=leaves,
        maximal_neighbour_map=tuple(maximal_neighbours(g, v) for v in range(g.n)),
        forced_vertices=tuple(sorted(forced)),
    )


def every_vertex_has_maximal_neighbour(g: Graph) -> bool:
    return all(maximal_neighbours(g, v) for v in range(g.n))


def lemma_n_minus_1_condition(g: Graph, t: DistanceTable | None, v: int) -> bool:
    """Sufficient condition for ``V - {v}`` to be a mixed metric generator.

    Holds when every neighbour ``w`` of ``v`` is told apart from the edge
    ``vw`` by some vertex other than ``v``.
    """
    if t is None:
        t = all_pairs_distances(g)
    if not 0 <= v < g.n:
        raise IndexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    others = np.ones(g.n, dtype=bool)
    others[v] = False
    for w in g.adjacency[v]:
        k = g.edge_element(v, w).k
        if not np.any(t.ve[others, k] != t.vv[others, w]):
            return False
    return True


def vertex_pair_distinguishers(t: DistanceTable, x: Element, y: Element) -> tuple[int, ...]:
    """All vertices that distinguish ``x`` and ``y``."""
    g = t.graph
    cx = t.matrix[:, g.element_position(x)]
    cy = t.matrix[:, g.element_position(y)]
    return tuple(int(w) for w in np.flatnonzero(cx != cy))


__all__ = [
    "Variant",
    "EmptySet",
    "GeneratorCertificate",
    "StructuralReport",
    "distinguishes",
    "verify_generator",
    "is_generator",
    "structural_report",
    "every_vertex_has_maximal_neighbour",
    "maximal_neighbours",
    "is_extreme",
    "lemma_n_minus_1_condition",
    "vertex_pair_distinguishers",
]
