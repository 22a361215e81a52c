#!/usr/bin/env python3
"""Closed-form values for graph families, checked against the exact solver."""

import random

from mixdim import solve
from mixdim.families import (
    Complete,
    CompleteBipartite,
    Cycle,
    Grid,
    Path,
    build_family,
    family_mdim,
    family_note,
    family_text,
    random_tree,
)

specs = [Path(6), Cycle(3), Cycle(8), Complete(5), CompleteBipartite(2, 4), CompleteBipartite(3, 4), Grid(3, 4)]
rng = random.Random(3)
specs += [random_tree(9, rng) for _ in range(3)]

for spec in specs:
    g = build_family(spec)
    formula = family_mdim(spec)
    exact = solve(g)
    mark = "ok" if formula == exact.value else "MISMATCH"
    label = family_text(spec) if not hasattr(spec, "edges") else f"tree n={spec.n}"
    print(f"{label:14s} formula {formula:2d}  solver {exact.value:2d}  {mark}")
    note = family_note(spec)
    if note:
        print(f"{'':14s} note: {note}")

# a tree's value is its leaf count
tree = specs[-1]
g = build_family(tree)
print("\nleaves of the last tree:", [v for v in range(g.n) if g.degree(v) == 1])
