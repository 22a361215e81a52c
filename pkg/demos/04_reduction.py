#!/usr/bin/env python3
"""From a 3-CNF formula to a graph whose mixed dimension hits 2m + n exactly when satisfiable."""

import itertools

from mixdim import Variant, verify_generator
from mixdim.reduction import (
    CnfFormula,
    assignment_to_generator,
    build_reduction,
    generator_to_assignment,
    parse_cnf,
    verify_equivalence,
)

f = parse_cnf("c x1 or not x2 or x3\np cnf 3 1\n1 -2 3 0\n")
a = build_reduction(f)
print(f"{a.graph.n} vertices, {a.graph.m} edges, r = {a.r}")
for role in ("truth-component", "testing-component", "communication", "neutralizing", "correcting"):
    print(f"  {role:18s} {len(a.edges_with_role(role))}")

# every assignment gives a set of size r, valid exactly when it satisfies f
names = a.vertex_names()
for t in itertools.product((False, True), repeat=3):
    S = assignment_to_generator(a, t)
    cert = verify_generator(a.table, S, Variant.MDIM)
    why = "" if cert.valid else "  collide: " + " ".join(a.graph.element_label(x) for x in cert.failing_pair)
    print("".join("TF"[not b] for b in t), [names[v] for v in S], cert.valid, why)

# and a valid set of size r reads back as the assignment
S = assignment_to_generator(a, (True, True, False))
print("\nread back:", generator_to_assignment(a, S))

# all eight clauses over three variables: unsatisfiable, so the value exceeds r
unsat = CnfFormula.from_ints(3, [[x, 2 * y, 3 * z] for x in (1, -1) for y in (1, -1) for z in (1, -1)])
rep = verify_equivalence(unsat, max_clauses=8)
print(f"\nunsat: r = {rep.r}, structural lower bound {rep.structural_lower_bound}, exact mdim {rep.mdim}")
