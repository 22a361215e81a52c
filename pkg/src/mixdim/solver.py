"""Exact dim / edim / mdim by minimum hitting set search.

Every unordered pair of elements in a variant's universe yields the set of
vertices that distinguish it; a generator is exactly a vertex set meeting
all of those sets.  The search is a branch and bound over integer bitsets:

* constraints hit by vertices that every mixed metric generator contains
  (true twins, extreme vertices) are discharged up front, MDIM only;
* duplicate and dominated constraints (supersets of another) are dropped;
* each node branches on the constraint with fewest remaining distinguishers,
  and a greedy packing of pairwise disjoint constraints gives the bound.

In canonical mode a second, index-ordered search at the proven optimum size
returns the lexicographically smallest basis.
"""

from __future__ import annotations

import math
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .graph import DistanceTable, Element, Graph, all_pairs_distances, shortest_cycle
from .metrics import Variant, structural_report, verify_generator


@dataclass(frozen=True)
class PairConstraint:
    pair: tuple[Element, Element]
    distinguishers: tuple[int, ...]

    @property
    def mask(self) -> int:
        out = 0
        for v in self.distinguishers:
            out |= 1 << v
        return out


@dataclass(frozen=True)
class SolverConfig:
    node_limit: int = 10**7
    time_limit: float | None = None
    max_vertices: int = 64
    canonical: bool = False
    parallel: bool = False
    workers: int | None = None


@dataclass(frozen=True)
class SolveResult:
    variant: Variant
    value: int
    basis: tuple[int, ...]
    bounds_used: tuple[int, int]
    nodes_explored: int
    optimal: bool = True
    canonical: bool = False

    def as_dict(self) -> dict:
        return {
            "variant": self.variant.value,
            "value": self.value,
            "basis": list(self.basis),
            "bounds": list(self.bounds_used),
            "optimal": self.optimal,
            "canonical": self.canonical,
        }


class BudgetExceeded(RuntimeError):
    """The node/time/size cap was hit before optimality was proven.

    ``result`` carries the best generator found so far with
    ``optimal=False`` (or, if only the canonical pass ran out,
    ``optimal=True, canonical=False``).
    """

    def __init__(self, message: str, result: SolveResult):
        super().__init__(message)
        self.result = result


@dataclass(frozen=True)
class GirthBound:
    value: int
    witness_cycle: tuple[int, ...] | None
    generator: tuple[int, ...] = field(default=())


def _pair_masks(t: DistanceTable, variant: Variant) -> list[tuple[int, int, int]]:
    """``(j, l, mask)`` for every pair ``j < l`` of element positions."""
    g = t.graph
    cols = variant.columns(g)
    D = t.matrix[:, cols.start:cols.stop]
    N = D.shape[1]
    out: list[tuple[int, int, int]] = []
    if g.n <= 64:
        weights = (np.uint64(1) << np.arange(g.n, dtype=np.uint64))[:, None]
    for j in range(N - 1):
        neq = D[:, j : j + 1] != D[:, j + 1 :]
        if g.n <= 64:
            masks = (neq * weights).sum(axis=0, dtype=np.uint64).tolist()
        else:
            packed = np.packbits(neq, axis=0, bitorder="little").T
            masks = [int.from_bytes(row.tobytes(), "little") for row in packed]
        base = cols.start
        out.extend((base + j, base + j + 1 + i, mk) for i, mk in enumerate(masks))
    return out


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def build_constraints(t: DistanceTable, variant: Variant) -> list[PairConstraint]:
    """One constraint per unordered pair of the variant's universe, in element order."""
    g = t.graph
    out = []
    for j, l, mask in _pair_masks(t, variant):
        if mask == 0:
            raise AssertionError(f"pair {j},{l} is distinguished by no vertex")
        out.append(PairConstraint((g.element(j), g.element(l)), tuple(_bits(mask))))
    return out


def lower_bound(g: Graph) -> int:
    """Structural lower bound on mdim: forced vertices plus false-twin hits."""
    rep = structural_report(g)
    forced = set(rep.forced_vertices)
    extra = 0
    for cell in rep.false_twin_classes:
        # all but one vertex of a false-twin class lie in every generator
        extra += max(0, len(cell) - 1 - len(forced.intersection(cell)))
    return max(2, len(forced) + extra)


def upper_bound_girth(g: Graph) -> GirthBound:
    cycle = shortest_cycle(g)
    if cycle is None:
        return GirthBound(g.n, None, tuple(range(g.n)))
    r = len(cycle)
    keep = {cycle[0], cycle[1], cycle[math.ceil(r / 2)]}
    generator = tuple(sorted((set(range(g.n)) - set(cycle)) | keep))
    return GirthBound(g.n - r + 3, tuple(cycle), generator)


def _minimal_masks(masks: set[int]) -> list[int]:
    kept: list[int] = []
    for mk in sorted(masks, key=lambda x: (x.bit_count(), x)):
        if not any(k & ~mk == 0 for k in kept):
            kept.append(mk)
    return kept


def _packing_bound(cons: list[int]) -> int:
    used = 0
    count = 0
    for mk in sorted(cons, key=int.bit_count):
        if mk & used == 0:
            used |= mk
            count += 1
    return count


def _greedy_cover(cons: list[int], n: int) -> int:
    chosen = 0
    left = list(cons)
    while left:
        score = [0] * n
        for mk in left:
            for v in _bits(mk):
                score[v] += 1
        best = max(range(n), key=lambda v: (score[v], -v))
        chosen |= 1 << best
        left = [mk for mk in left if not mk >> best & 1]
    return chosen


class _OutOfBudget(Exception):
    pass


class _Search:
    def __init__(self, n: int, cons: list[int], cfg: SolverConfig, best: int, best_mask: int):
        self.n = n
        self.cons = cons
        self.cfg = cfg
        self.best = best
        self.best_mask = best_mask
        self.nodes = 0
        self.lock = threading.Lock()
        self.deadline = None if cfg.time_limit is None else time.monotonic() + cfg.time_limit

    def _tick(self) -> None:
        with self.lock:
            self.nodes += 1
            nodes = self.nodes
        if nodes > self.cfg.node_limit:
            raise _OutOfBudget("node limit")
        if self.deadline is not None and nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget("time limit")

    def _offer(self, count: int, chosen: int) -> None:
        with self.lock:
            if count < self.best:
                self.best = count
                self.best_mask = chosen

    # optimisation ------------------------------------------------------

    def minimise(self) -> None:
        if not self.cons:
            self._offer(0, 0)
            return
        if not self.cfg.parallel:
            self._branch(0, 0, self.cons)
            return
        tasks = self._root_children()
        workers = self.cfg.workers or min(8, len(tasks)) or 1
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(self._branch, chosen, count, cons) for chosen, count, cons in tasks]
            for fut in futures:
                fut.result()

    def _root_children(self) -> list[tuple[int, int, list[int]]]:
        self._tick()
        pivot = min(self.cons, key=int.bit_count)
        out = []
        excluded = 0
        for v in _bits(pivot):
            bit = 1 << v
            sub = [mk & ~excluded for mk in self.cons if not mk & bit]
            if all(sub):
                out.append((bit, 1, sub))
            excluded |= bit
        return out

    def _branch(self, chosen: int, count: int, cons: list[int]) -> None:
        self._tick()
        if not cons:
            self._offer(count, chosen)
            return
        if count + _packing_bound(cons) >= self.best:
            return
        pivot = min(cons, key=int.bit_count)
        excluded = 0
        for v in _bits(pivot):
            bit = 1 << v
            sub = []
            feasible = True
            for mk in cons:
                if mk & bit:
                    continue
                mk &= ~excluded
                if not mk:
                    feasible = False
                    break
                sub.append(mk)
            if feasible:
                self._branch(chosen | bit, count + 1, sub)
            excluded |= bit
            if count + 1 >= self.best:
                return

    # canonical pass ---------------------------------------------------

    def lex_first(self, size: int) -> int | None:
        """Lexicographically smallest hitting set of exactly ``size`` vertices."""
        return self._lex(0, 0, 0, self.cons, size)

    def _lex(self, v: int, chosen: int, count: int, cons: list[int], size: int) -> int | None:
        self._tick()
        if not cons:
            return chosen if count == size else None
        if count >= size or v >= self.n:
            return None
        if count + _packing_bound(cons) > size:
            return None
        bit = 1 << v
        if any(mk & bit for mk in cons):
            found = self._lex(v + 1, chosen | bit, count + 1, [mk for mk in cons if not mk & bit], size)
            if found is not None:
                return found
        sub = []
        for mk in cons:
            mk &= ~bit
            if not mk:
                return None
            sub.append(mk)
        return self._lex(v + 1, chosen, count, sub, size)


def _prepare(t: DistanceTable, variant: Variant) -> tuple[int, list[int]]:
    """Forced vertex mask and the reduced constraint list."""
    g = t.graph
    forced = 0
    if variant is Variant.MDIM:
        for v in structural_report(g).forced_vertices:
            forced |= 1 << v
    masks = set()
    for j, l, mk in _pair_masks(t, variant):
        if mk == 0:
            raise AssertionError(f"pair {j},{l} is distinguished by no vertex")
        if not mk & forced:
            masks.add(mk)
    return forced, _minimal_masks(masks)


def solve(
    g: Graph,
    variant: Variant = Variant.MDIM,
    cfg: SolverConfig | None = None,
    table: DistanceTable | None = None,
) -> SolveResult:
    """Minimum generator of ``g`` for ``variant``.

    Raises :class:`BudgetExceeded` (carrying the incumbent) when a cap in
    ``cfg`` stops the search before optimality is proven.
    """
    cfg = cfg or SolverConfig()
    t = table if table is not None else all_pairs_distances(g)
    forced, cons = _prepare(t, variant)
    n_forced = forced.bit_count()

    ub_mask = forced | _greedy_cover(cons, g.n)
    if variant is Variant.MDIM:
        gb = upper_bound_girth(g)
        gmask = sum(1 << v for v in gb.generator)
        if gmask.bit_count() < ub_mask.bit_count() and verify_generator(t, gb.generator, variant).valid:
            ub_mask = gmask
    lower = n_forced + _packing_bound(cons)
    if variant is Variant.MDIM:
        lower = max(lower, lower_bound(g))
    else:
        lower = max(lower, 1)
    upper = ub_mask.bit_count()
    bounds = (lower, upper)

    def incumbent(search: _Search | None, optimal: bool) -> SolveResult:
        mask = ub_mask if search is None else forced | search.best_mask
        return SolveResult(variant, mask.bit_count(), tuple(_bits(mask)), bounds,
                           0 if search is None else search.nodes, optimal)

    if not cons:
        # generators are nonempty; vertex 0 is the lexicographically first choice
        mask = forced or 1
        return SolveResult(variant, mask.bit_count(), tuple(_bits(mask)), (mask.bit_count(),) * 2, 0,
                           True, cfg.canonical)
    if g.n > cfg.max_vertices:
        raise BudgetExceeded(f"n={g.n} exceeds max_vertices={cfg.max_vertices}", incumbent(None, False))

    residual_ub = (ub_mask & ~forced).bit_count()
    search = _Search(g.n, cons, cfg, residual_ub, ub_mask & ~forced)
    if lower < upper:
        try:
            search.minimise()
        except _OutOfBudget as exc:
            raise BudgetExceeded(f"search stopped: {exc}", incumbent(search, False)) from None
    result = incumbent(search, True)
    if not cfg.canonical:
        return result
    try:
        lex = search.lex_first(result.value - n_forced)
    except _OutOfBudget as exc:
        raise BudgetExceeded(f"canonical pass stopped: {exc}", result) from None
    assert lex is not None
    mask = forced | lex
    return SolveResult(variant, result.value, tuple(_bits(mask)), bounds, search.nodes, True, True)
