#!/usr/bin/env python3
"""Structural lower bound, girth upper bound and the exact value in between."""

from mixdim import Variant, solve
from mixdim.enumeration import connected_graphs
from mixdim.graph import ACYCLIC, girth
from mixdim.metrics import structural_report
from mixdim.solver import lower_bound, upper_bound_girth

# how tight are the bounds over every connected graph on 6 vertices?
gaps = {}
for g in connected_graphs(6):
    lo, hi = lower_bound(g), upper_bound_girth(g).value
    value = solve(g, Variant.MDIM).value
    assert lo <= value <= hi
    gaps[(value - lo, hi - value)] = gaps.get((value - lo, hi - value), 0) + 1

print("(value-lower, upper-value) -> count over 112 graphs")
for key in sorted(gaps):
    print(f"  {key}: {gaps[key]}")

# one graph in detail: a triangle with a pendant path
g = next(g for g in connected_graphs(5) if girth(g) == 3 and g.m == 5)
rep = structural_report(g)
gb = upper_bound_girth(g)
print("\nedges:", g.edges)
print("girth:", "acyclic" if girth(g) is ACYCLIC else girth(g))
print("forced vertices:", rep.forced_vertices, " true twins:", rep.true_twin_classes)
print("girth generator:", gb.generator, "from cycle", gb.witness_cycle)
print("lower", lower_bound(g), "exact", solve(g).value, "upper", gb.value)
