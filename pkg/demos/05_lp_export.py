#!/usr/bin/env python3
"""The 0/1 program behind a graph, written as LP text and solved by enumeration."""

from mixdim import solve
from mixdim.families import Cycle, build_family
from mixdim.lp import brute_force_optimum, export_ilp, parse_lp

g = build_family(Cycle(4))
text = export_ilp(g)
print(text)

objective, rows, binaries = parse_lp(text)
print(f"{len(binaries)} binaries, {len(rows)} covering rows")

# any LP/MIP solver reads this file; here the tiny model is enumerated directly
value, chosen = brute_force_optimum(text)
print("model optimum", value, "at", chosen, " solver", solve(g).value)
