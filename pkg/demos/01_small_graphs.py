#!/usr/bin/env python3
"""Three dimensions side by side on a handful of small graphs."""

from mixdim import Variant, all_pairs_distances, build_graph, solve, verify_generator
from mixdim.families import Cycle, Path, build_family

# the Petersen graph: outer 5-cycle, spokes, inner pentagram
outer = [(i, (i + 1) % 5) for i in range(5)]
spokes = [(i, i + 5) for i in range(5)]
inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
petersen = build_graph(10, outer + spokes + inner)

graphs = {"P5": build_family(Path(5)), "C6": build_family(Cycle(6)), "Petersen": petersen}

print(f"{'graph':10s} {'dim':>4s} {'edim':>5s} {'mdim':>5s}  basis")
for name, g in graphs.items():
    t = all_pairs_distances(g)
    values = [solve(g, v, table=t).value for v in Variant]
    basis = solve(g, Variant.MDIM, table=t).basis
    print(f"{name:10s} {values[0]:4d} {values[1]:5d} {values[2]:5d}  {list(basis)}")

# the distance table has one column per vertex, then one per edge
t = all_pairs_distances(graphs["C6"])
print("\nC6 distances from v0, vertices then edges:")
print(t.matrix[0])

# two adjacent vertices of C4 fail: a vertex and one of its edges look alike
c4 = build_family(Cycle(4))
cert = verify_generator(all_pairs_distances(c4), [0, 1], Variant.MDIM)
x, y = cert.failing_pair
print(f"\nC4 with S = {{0, 1}}: valid={cert.valid}, {c4.element_label(x)} and {c4.element_label(y)} collide")

# adding a third vertex repairs it
print("S = {0, 1, 2}:", verify_generator(all_pairs_distances(c4), [0, 1, 2], Variant.MDIM).valid)
print("columns per variant:", {v.value: len(v.columns(c4)) for v in Variant})
