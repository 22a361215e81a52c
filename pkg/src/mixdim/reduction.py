"""3-SAT to MDIM: gadget graph construction and both directions of the correspondence.

Each variable ``u_i`` gets a six-vertex truth-setting gadget
``T_i, F_i, a_i, b_i, c_i, d_i`` with edges
``T_i c_i, a_i c_i, a_i b_i, b_i d_i, c_i d_i, d_i F_i``.  Each clause ``c_j``
gets a six-vertex testing gadget ``c_j^1 .. c_j^6`` with edges
``c^1c^2, c^2c^5, c^1c^3, c^2c^4, c^6c^3, c^3c^4``.  Gadgets are wired by

* communication edges: positive literal ``u_i`` gives ``T_i c_j^1, F_i c_j^2``,
  negative gives ``T_i c_j^2, F_i c_j^1``;
* neutralizing edges ``T_k c_j^2`` for every variable absent from ``c_j``;
* correcting edges: a clique on the hubs ``c_j^2``.

The formula is satisfiable iff the graph has mixed metric dimension
``2m + n`` (``m`` clauses, ``n`` variables).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graph import DistanceTable, Graph, Vertex, all_pairs_distances, build_graph
from .metrics import Variant, structural_report, vertex_pair_distinguishers, verify_generator
from .solver import BudgetExceeded, SolverConfig, lower_bound, solve

Literal = tuple[int, bool]  # (variable index, polarity); True = positive


class CnfError(ValueError):
    pass


class Malformed(CnfError):
    pass


class ClauseNotThreeDistinctVars(CnfError):
    pass


class IncompleteAssignment(ValueError):
    pass


class NotAGenerator(ValueError):
    pass


class WrongCardinality(ValueError):
    pass


class AmbiguousComponent(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[Literal, Literal, Literal], ...]

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise Malformed("formula needs at least one variable")
        if not self.clauses:
            raise Malformed("formula needs at least one clause")
        for j, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise ClauseNotThreeDistinctVars(f"clause {j + 1} has {len(clause)} literals")
            variables = [var for var, _ in clause]
            for var in variables:
                if not 0 <= var < self.num_vars:
                    raise Malformed(f"clause {j + 1} uses variable {var + 1} > {self.num_vars}")
            if len(set(variables)) != 3:
                raise ClauseNotThreeDistinctVars(f"clause {j + 1} repeats a variable: {_dimacs_clause(clause)}")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, assignment: tuple[bool, ...]) -> bool:
        return all(any(assignment[var] == pol for var, pol in clause) for clause in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {self.num_clauses}"]
        lines.extend(_dimacs_clause(c) + " 0" for c in self.clauses)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_ints(cls, num_vars: int, clauses) -> "CnfFormula":
        """Build from DIMACS-style signed 1-based literals, e.g. ``[[1, -2, 3]]``."""
        return cls(num_vars, tuple(tuple((abs(x) - 1, x > 0) for x in c) for c in clauses))


def _dimacs_clause(clause) -> str:
    return " ".join(str(var + 1 if pol else -(var + 1)) for var, pol in clause)


def parse_cnf(text: str) -> CnfFormula:
    """Parse DIMACS CNF text into a 3-CNF formula with distinct variables per clause."""
    header = None
    literals: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise Malformed(f"line {lineno}: bad problem line {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise Malformed(f"line {lineno}: bad problem line {line!r}") from None
            continue
        if header is None:
            raise Malformed(f"line {lineno}: clause before 'p cnf' header")
        try:
            literals.extend(int(tok) for tok in line.split())
        except ValueError:
            raise Malformed(f"line {lineno}: non-integer literal in {line!r}") from None
    if header is None:
        raise Malformed("missing 'p cnf n m' header")
    if literals and literals[-1] != 0:
        raise Malformed("last clause is not terminated by 0")
    num_vars, num_clauses = header
    clauses: list[list[int]] = []
    current: list[int] = []
    for lit in literals:
        if lit == 0:
            clauses.append(current)
            current = []
        else:
            if abs(lit) > num_vars:
                raise Malformed(f"literal {lit} exceeds declared {num_vars} variables")
            current.append(lit)
    if not clauses:
        raise Malformed("no clauses")
    if len(clauses) != num_clauses:
        raise Malformed(f"header declares {num_clauses} clauses, found {len(clauses)}")
    for j, c in enumerate(clauses):
        if len(c) != 3 or len({abs(x) for x in c}) != 3:
            raise ClauseNotThreeDistinctVars(f"clause {j + 1} ({' '.join(map(str, c))}) is not three distinct variables")
    return CnfFormula.from_ints(num_vars, clauses)


VARIABLE_ROLES = ("T", "F", "a", "b", "c", "d")
ROLE_ORDER = ("truth-component", "testing-component", "communication", "neutralizing", "correcting")


def variable_vertex(i: int, role: str) -> int:
    return 6 * i + VARIABLE_ROLES.index(role)


def clause_vertex(num_vars: int, j: int, k: int) -> int:
    """Index of ``c_j^k`` (0-based clause ``j``, ``k`` in 1..6)."""
    return 6 * num_vars + 6 * j + (k - 1)


@dataclass(frozen=True)
class ReductionArtifact:
    formula: CnfFormula
    graph: Graph
    r: int
    labels: dict[str, int]
    edge_roles: dict[tuple[int, int], str]
    _table: list = field(default_factory=list, repr=False, compare=False)

    @property
    def table(self) -> DistanceTable:
        if not self._table:
            self._table.append(all_pairs_distances(self.graph))
        return self._table[0]

    def vertex_names(self) -> list[str]:
        names = [""] * self.graph.n
        for name, v in self.labels.items():
            names[v] = name
        return names

    def edges_with_role(self, role: str) -> list[tuple[int, int]]:
        return [e for e in self.graph.edges if self.edge_roles[e] == role]

    def sidecar(self) -> dict:
        return {
            "schema": "mixdim/1",
            "r": self.r,
            "num_vars": self.formula.num_vars,
            "num_clauses": self.formula.num_clauses,
            "labels": dict(sorted(self.labels.items(), key=lambda kv: kv[1])),
            "edge_roles": [[u, v, self.edge_roles[(u, v)]] for u, v in self.graph.edges],
        }


def build_reduction(f: CnfFormula) -> ReductionArtifact:
    n, m = f.num_vars, f.num_clauses
    labels: dict[str, int] = {}
    roles: dict[tuple[int, int], str] = {}

    def add(u: int, v: int, role: str) -> None:
        key = (min(u, v), max(u, v))
        roles.setdefault(key, role)

    for i in range(n):
        for role in VARIABLE_ROLES:
            labels[f"{role}_{i + 1}"] = variable_vertex(i, role)
        T, F, a, b, c, d = (variable_vertex(i, role) for role in VARIABLE_ROLES)
        for u, v in ((T, c), (a, c), (a, b), (b, d), (c, d), (d, F)):
            add(u, v, "truth-component")

    for j, clause in enumerate(f.clauses):
        cv = [None] + [clause_vertex(n, j, k) for k in range(1, 7)]
        for k in range(1, 7):
            labels[f"c_{j + 1}^{k}"] = cv[k]
        for p, q in ((1, 2), (2, 5), (1, 3), (2, 4), (6, 3), (3, 4)):
            add(cv[p], cv[q], "testing-component")
        present = set()
        for var, positive in clause:
            present.add(var)
            T, F = variable_vertex(var, "T"), variable_vertex(var, "F")
            if positive:
                add(T, cv[1], "communication")
                add(F, cv[2], "communication")
            else:
                add(T, cv[2], "communication")
                add(F, cv[1], "communication")
        for k in range(n):
            if k not in present:
                add(variable_vertex(k, "T"), cv[2], "neutralizing")
    for j, k in itertools.combinations(range(m), 2):
        add(clause_vertex(n, j, 2), clause_vertex(n, k, 2), "correcting")

    g = build_graph(6 * (n + m), roles.keys())
    return ReductionArtifact(formula=f, graph=g, r=2 * m + n, labels=labels, edge_roles=roles)


def _forced_clause_vertices(a: ReductionArtifact) -> set[int]:
    n = a.formula.num_vars
    return {clause_vertex(n, j, k) for j in range(a.formula.num_clauses) for k in (5, 6)}


def assignment_to_generator(a: ReductionArtifact, t) -> tuple[int, ...]:
    """Vertex set of size ``r`` built from a truth assignment.

    Takes ``c_j^5, c_j^6`` for every clause and ``a_i`` (true) or ``b_i``
    (false) for every variable.  It is a mixed metric generator exactly when
    the assignment satisfies the formula.
    """
    t = tuple(bool(x) for x in t)
    if len(t) != a.formula.num_vars:
        raise IncompleteAssignment(f"need {a.formula.num_vars} truth values, got {len(t)}")
    S = _forced_clause_vertices(a)
    for i, value in enumerate(t):
        S.add(variable_vertex(i, "a" if value else "b"))
    return tuple(sorted(S))


def generator_to_assignment(a: ReductionArtifact, S) -> tuple[bool, ...]:
    S = set(int(v) for v in S)
    if len(S) != a.r:
        raise WrongCardinality(f"|S|={len(S)} but r={a.r}")
    missing = _forced_clause_vertices(a) - S
    if missing:
        names = a.vertex_names()
        raise NotAGenerator(f"S lacks {', '.join(names[v] for v in sorted(missing))}")
    gadgets = [S & {variable_vertex(i, role) for role in VARIABLE_ROLES} for i in range(a.formula.num_vars)]
    for i, inside in enumerate(gadgets):
        if len(inside) > 1:
            # forced leaves plus one vertex per variable already exhaust r
            raise WrongCardinality(f"variable {i + 1}: S has {len(inside)} gadget vertices, budget r allows one")
    cert = verify_generator(a.table, S, Variant.MDIM)
    if not cert.valid:
        x, y = cert.failing_pair
        raise NotAGenerator(f"S does not distinguish {a.graph.element_label(x)} and {a.graph.element_label(y)}")
    out = []
    for i, inside in enumerate(gadgets):
        has_a = variable_vertex(i, "a") in inside
        has_b = variable_vertex(i, "b") in inside
        if len(inside) != 1 or has_a == has_b:
            raise AmbiguousComponent(f"variable {i + 1}: S meets its gadget in {sorted(inside)}")
        out.append(has_a)
    return tuple(out)


def satisfying_assignments(f: CnfFormula):
    """Truth-table enumeration, assignments in binary counting order (u_1 slowest)."""
    for bits in itertools.product((False, True), repeat=f.num_vars):
        if f.satisfied_by(bits):
            yield bits


@dataclass(frozen=True)
class EquivalenceReport:
    num_vars: int
    num_clauses: int
    r: int
    satisfiable: bool
    structural_lower_bound: int
    lower_bound_confirmed: bool
    mdim: int | None
    exact: bool
    holds: bool | None
    generator: tuple[int, ...] | None = None

    def as_dict(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "num_clauses": self.num_clauses,
            "r": self.r,
            "satisfiable": self.satisfiable,
            "structural_lower_bound": self.structural_lower_bound,
            "lower_bound_confirmed": self.lower_bound_confirmed,
            "mdim": self.mdim,
            "exact": self.exact,
            "equivalence_holds": self.holds,
        }


def structural_lower_bound(a: ReductionArtifact) -> int:
    """Certified lower bound on the artifact's mixed metric dimension.

    Forced vertices (the testing-gadget leaves among them) plus a packing of
    the pairs ``(c_i, a_i c_i)``: each is told apart only by ``a_i`` or
    ``b_i``, so the packing contributes one vertex per variable.
    """
    g, t = a.graph, a.table
    forced = set(structural_report(g).forced_vertices)
    used: set[int] = set()
    packed = 0
    for i in range(a.formula.num_vars):
        c, av = variable_vertex(i, "c"), variable_vertex(i, "a")
        hitters = set(vertex_pair_distinguishers(t, Vertex(c), g.edge_element(av, c)))
        if not hitters & (forced | used):
            used |= hitters
            packed += 1
    return max(lower_bound(g), len(forced) + packed)


def verify_equivalence(
    f: CnfFormula,
    cfg: SolverConfig | None = None,
    max_vars: int = 3,
    max_clauses: int = 3,
) -> EquivalenceReport:
    """Check ``satisfiable <=> mdim == 2m + n`` on one formula.

    The exact solve runs only within ``max_vars`` / ``max_clauses``; above
    that only the truth table, the lower bound and (when satisfiable) the
    constructive generator are checked.  Raises :class:`BudgetExceeded`
    if the solver gives up inside the caps.
    """
    if f.num_vars > 10:
        raise ValueError("truth-table check is limited to 10 variables")
    a = build_reduction(f)
    witness = next(satisfying_assignments(f), None)
    sat = witness is not None
    slb = structural_lower_bound(a)
    confirmed = slb >= a.r
    generator = None
    if sat:
        generator = assignment_to_generator(a, witness)
        if not verify_generator(a.table, generator, Variant.MDIM).valid:
            generator = None
    if f.num_vars > max_vars or f.num_clauses > max_clauses:
        # constructive direction only
        holds = None if not sat else (generator is not None and confirmed)
        return EquivalenceReport(f.num_vars, f.num_clauses, a.r, sat, slb, confirmed,
                                 a.r if holds else None, False, holds, generator)
    cfg = cfg or SolverConfig()
    if a.graph.n > cfg.max_vertices:
        cfg = SolverConfig(cfg.node_limit, cfg.time_limit, a.graph.n, cfg.canonical, cfg.parallel, cfg.workers)
    res = solve(a.graph, Variant.MDIM, cfg, table=a.table)
    holds = sat == (res.value == a.r)
    return EquivalenceReport(f.num_vars, f.num_clauses, a.r, sat, slb, confirmed, res.value, True, holds,
                             res.basis)


__all__ = [
    "CnfFormula",
    "ReductionArtifact",
    "EquivalenceReport",
    "parse_cnf",
    "build_reduction",
    "assignment_to_generator",
    "generator_to_assignment",
    "satisfying_assignments",
    "verify_equivalence",
    "structural_lower_bound",
    "BudgetExceeded",
]
