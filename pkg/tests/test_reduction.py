import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixdim.graph import Vertex
from mixdim.metrics import Variant, verify_generator, vertex_pair_distinguishers
from mixdim.reduction import (
    AmbiguousComponent,
    ClauseNotThreeDistinctVars,
    CnfFormula,
    IncompleteAssignment,
    Malformed,
    NotAGenerator,
    WrongCardinality,
    assignment_to_generator,
    build_reduction,
    clause_vertex,
    generator_to_assignment,
    parse_cnf,
    satisfying_assignments,
    structural_lower_bound,
    variable_vertex,
    verify_equivalence,
)
from mixdim.solver import SolverConfig, solve

ONE_CLAUSE = "c one clause\np cnf 3 1\n1 -2 3 0\n"


def all_polarities():
    return CnfFormula.from_ints(
        3, [[a * 1, b * 2, c * 3] for a in (1, -1) for b in (1, -1) for c in (1, -1)]
    )


@st.composite
def formulas(draw, max_vars=6, max_clauses=5):
    n = draw(st.integers(3, max_vars))
    m = draw(st.integers(1, max_clauses))
    clauses = []
    for _ in range(m):
        vs = draw(st.lists(st.integers(1, n), min_size=3, max_size=3, unique=True))
        signs = draw(st.lists(st.sampled_from((1, -1)), min_size=3, max_size=3))
        clauses.append([v * s for v, s in zip(vs, signs)])
    return CnfFormula.from_ints(n, clauses)


def test_parse_one_clause():
    f = parse_cnf(ONE_CLAUSE)
    assert f.num_vars == 3
    assert f.clauses == (((0, True), (1, False), (2, True)),)
    assert parse_cnf(f.to_dimacs()) == f


def test_parse_multiline_clause_and_percent_terminator():
    f = parse_cnf("p cnf 4 2\n1 2\n3 0 -1 -2\n-4 0\n%\n0\n")
    assert f.clauses == (((0, True), (1, True), (2, True)), ((0, False), (1, False), (3, False)))


@pytest.mark.parametrize(
    "text, exc",
    [
        ("p cnf 3 1\n1 1 2 0\n", ClauseNotThreeDistinctVars),
        ("p cnf 3 1\n1 -1 2 0\n", ClauseNotThreeDistinctVars),
        ("p cnf 3 1\n1 2 0\n", ClauseNotThreeDistinctVars),
        ("p cnf 3 0\n", Malformed),
        ("1 2 3 0\n", Malformed),
        ("p cnf 3 2\n1 2 3 0\n", Malformed),
        ("p cnf 3 1\n1 2 4 0\n", Malformed),
        ("p cnf 3 1\n1 2 x 0\n", Malformed),
        ("p cnf 3 1\n1 2 3\n", Malformed),
        ("p dnf 3 1\n1 2 3 0\n", Malformed),
    ],
)
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_cnf(text)


def test_counts_one_clause():
    a = build_reduction(parse_cnf(ONE_CLAUSE))
    g = a.graph
    assert g.n == 24 and a.r == 5
    # 3 truth gadgets + 1 testing gadget + 6 communication edges
    assert g.m == 18 + 6 + 6 == 30
    assert len(a.edges_with_role("neutralizing")) == 0
    assert len(a.edges_with_role("correcting")) == 0


def test_counts_n4_m2():
    a = build_reduction(CnfFormula.from_ints(4, [[1, 2, 3], [-2, 3, -4]]))
    assert a.graph.n == 36 and a.r == 8
    assert len(a.edges_with_role("neutralizing")) == 2
    assert len(a.edges_with_role("correcting")) == 1


def test_one_clause_communication_edges():
    a = build_reduction(parse_cnf(ONE_CLAUSE))
    L = a.labels
    want = {
        (L["T_1"], L["c_1^1"]), (L["F_1"], L["c_1^2"]),
        (L["T_2"], L["c_1^2"]), (L["F_2"], L["c_1^1"]),
        (L["T_3"], L["c_1^1"]), (L["F_3"], L["c_1^2"]),
    }
    want = {(min(e), max(e)) for e in want}
    assert set(a.edges_with_role("communication")) == want


@settings(max_examples=40, deadline=None)
@given(formulas(max_vars=8, max_clauses=6))
def test_structural_invariants(f):
    a = build_reduction(f)
    g, L = a.graph, a.labels
    n, m = f.num_vars, f.num_clauses
    assert g.n == 6 * (n + m) and a.r == 2 * m + n
    assert len(a.edges_with_role("correcting")) == m * (m - 1) // 2
    assert len(a.edges_with_role("neutralizing")) == m * (n - 3)
    assert len(a.edges_with_role("communication")) == 6 * m
    for i in range(1, n + 1):
        names = ["T_%d c_%d", "a_%d c_%d", "a_%d b_%d", "b_%d d_%d", "c_%d d_%d", "d_%d F_%d"]
        want = set()
        for pat in names:
            x, y = (pat % (i, i)).split()
            want.add((min(L[x], L[y]), max(L[x], L[y])))
        inside = {e for e in g.edges if e[0] in range(6 * (i - 1), 6 * i) and e[1] in range(6 * (i - 1), 6 * i)}
        assert inside == want
        assert all(a.edge_roles[e] == "truth-component" for e in want)
    for j in range(1, m + 1):
        pairs = [(1, 2), (2, 5), (1, 3), (2, 4), (6, 3), (3, 4)]
        want = {tuple(sorted((L[f"c_{j}^{p}"], L[f"c_{j}^{q}"]))) for p, q in pairs}
        block = range(6 * n + 6 * (j - 1), 6 * n + 6 * j)
        assert {e for e in g.edges if e[0] in block and e[1] in block} == want
        hub = L[f"c_{j}^2"]
        for k in range(n):
            if k not in {var for var, _ in f.clauses[j - 1]}:
                assert a.edge_roles[(L[f"T_{k + 1}"], hub)] == "neutralizing"
    assert structural_lower_bound(a) >= a.r


def test_sidecar_round_trip():
    a = build_reduction(parse_cnf(ONE_CLAUSE))
    side = a.sidecar()
    assert side["schema"] == "mixdim/1" and side["r"] == 5
    assert side["labels"]["c_1^5"] == clause_vertex(3, 0, 5)
    assert len(side["edge_roles"]) == a.graph.m


def test_assignment_generator_sizes_and_validity():
    f = parse_cnf(ONE_CLAUSE)
    a = build_reduction(f)
    for t in itertools.product((False, True), repeat=3):
        S = assignment_to_generator(a, t)
        assert len(S) == 5
        assert verify_generator(a.table, S, Variant.MDIM).valid == f.satisfied_by(t)
    assert verify_generator(a.table, assignment_to_generator(a, (True, False, True)), Variant.MDIM).valid
    with pytest.raises(IncompleteAssignment):
        assignment_to_generator(a, (True, False))


def test_falsifying_assignment_fails_inside_testing_gadget():
    f = all_polarities()
    a = build_reduction(f)
    L = a.labels
    for t in itertools.product((False, True), repeat=3):
        S = assignment_to_generator(a, t)
        cert = verify_generator(a.table, S, Variant.MDIM)
        assert not cert.valid
        # the falsified clause: every literal false under t
        j = next(j for j, c in enumerate(f.clauses) if not any(t[v] == p for v, p in c)) + 1
        e1 = a.graph.edge_element(L[f"c_{j}^1"], L[f"c_{j}^2"])
        e2 = a.graph.edge_element(L[f"c_{j}^2"], L[f"c_{j}^4"])
        assert not set(vertex_pair_distinguishers(a.table, e1, e2)) & set(S)
        block = {L[f"c_{j}^{k}"] for k in range(1, 7)}
        for x in cert.failing_pair:
            ends = {x.i} if isinstance(x, Vertex) else set(a.graph.edges[x.k])
            assert ends <= block


def test_round_trip_and_errors():
    f = parse_cnf(ONE_CLAUSE)
    a = build_reduction(f)
    for t in satisfying_assignments(f):
        assert generator_to_assignment(a, assignment_to_generator(a, t)) == t
    S = list(assignment_to_generator(a, (True, True, True)))
    c5 = a.labels["c_1^5"]
    with pytest.raises(NotAGenerator):
        generator_to_assignment(a, [v for v in S if v != c5] + [a.labels["T_1"]])
    # size r with both a_1 and b_1 leaves gadget 2 empty
    both = [v for v in S if v != a.labels["a_2"]] + [a.labels["b_1"]]
    assert len(set(both)) == a.r
    with pytest.raises(WrongCardinality, match="variable 1"):
        generator_to_assignment(a, both)
    with pytest.raises(WrongCardinality):
        generator_to_assignment(a, S[:-1])
    # a_1 swapped for c_1: right size, one vertex per gadget, not a generator
    swapped = [v for v in S if v != a.labels["a_1"]] + [variable_vertex(0, "c")]
    with pytest.raises(NotAGenerator):
        generator_to_assignment(a, swapped)
    assert issubclass(AmbiguousComponent, ValueError)


def test_equivalence_one_clause():
    rep = verify_equivalence(parse_cnf(ONE_CLAUSE))
    assert rep.satisfiable and rep.mdim == 5 == rep.r and rep.holds and rep.exact


def test_equivalence_unsat_all_polarities():
    f = all_polarities()
    assert next(satisfying_assignments(f), None) is None
    rep = verify_equivalence(f, max_clauses=8)
    assert not rep.satisfiable and rep.exact and rep.holds
    assert rep.mdim > rep.r == 19
    assert rep.lower_bound_confirmed and rep.structural_lower_bound == 19
    a = build_reduction(f)
    assert verify_generator(a.table, rep.generator, Variant.MDIM).valid


def test_equivalence_above_caps_runs_polynomial_legs():
    f = CnfFormula.from_ints(5, [[1, 2, 3], [-1, 4, 5], [2, -3, -5], [1, -4, 5]])
    rep = verify_equivalence(f)
    assert not rep.exact and rep.satisfiable and rep.holds and rep.lower_bound_confirmed
    assert rep.mdim == rep.r


def test_optimal_bases_contain_forced_vertices():
    rng = random.Random(11)
    for _ in range(4):
        clauses = []
        for _ in range(2):
            vs = rng.sample(range(1, 4), 3)
            clauses.append([v * rng.choice((1, -1)) for v in vs])
        f = CnfFormula.from_ints(3, clauses)
        a = build_reduction(f)
        res = solve(a.graph, Variant.MDIM, SolverConfig(canonical=True), table=a.table)
        B = set(res.basis)
        for j in range(f.num_clauses):
            assert {clause_vertex(3, j, 5), clause_vertex(3, j, 6)} <= B
        for i in range(3):
            assert B & {variable_vertex(i, "a"), variable_vertex(i, "b")}
