import numpy as np
import pytest
from hypothesis import given, settings

from mixdim.families import Cycle, Grid, Path, build_family, random_tree
from mixdim.graph import (
    ACYCLIC,
    Acyclic,
    Disconnected,
    DuplicateEdge,
    Edge,
    IndexOutOfRange,
    SelfLoop,
    TooSmall,
    Vertex,
    all_pairs_distances,
    build_graph,
    girth,
    shortest_cycle,
)

from conftest import connected_graphs
from oracles import bfs_distances, simple_cycle_lengths


def test_smallest_graph_accepted():
    g = build_graph(2, [(0, 1)])
    assert g.n == 2 and g.edges == ((0, 1),)


def test_c4_accepted_and_canonical():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert g.adjacency[0] == (1, 3)


@pytest.mark.parametrize(
    "n, edges, exc, needle",
    [
        (3, [(0, 1)], Disconnected, "vertex 2"),
        (1, [], TooSmall, "n=1"),
        (3, [(0, 0), (0, 1), (1, 2)], SelfLoop, "vertex 0"),
        (3, [(0, 1), (1, 0), (1, 2)], DuplicateEdge, "(0, 1)"),
        (3, [(0, 1), (1, 3)], IndexOutOfRange, "vertex 3"),
    ],
)
def test_rejections_name_the_datum(n, edges, exc, needle):
    with pytest.raises(exc, match=needle.replace("(", r"\(").replace(")", r"\)")):
        build_graph(n, edges)


def test_p3_distances():
    g = build_family(Path(3))
    t = all_pairs_distances(g)
    assert t.vv[0, 2] == 2
    assert t.distance(2, g.edge_element(0, 1)) == 1


def test_c5_vertex_to_edge():
    g = build_family(Cycle(5))
    t = all_pairs_distances(g)
    assert t.distance(0, g.edge_element(2, 3)) == 2


def test_element_order():
    g = build_family(Cycle(4))
    assert [g.element(i) for i in range(g.num_elements)] == [Vertex(i) for i in range(4)] + [Edge(k) for k in range(4)]
    assert g.element_label(Edge(1)) == "e(0,3)"
    assert Vertex(1) != Edge(1)
    assert g.element_position(Edge(2)) == 6


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=10))
def test_distances_match_bfs_oracle(g):
    t = all_pairs_distances(g)
    assert t.vv.tolist() == bfs_distances(g.n, g.edges)
    vv = t.vv
    assert np.array_equal(vv, vv.T) and not vv.diagonal().any()
    for k, (u, v) in enumerate(g.edges):
        assert np.all(np.abs(vv[:, u] - vv[:, v]) <= 1)
        assert np.array_equal(t.ve[:, k], np.minimum(vv[:, u], vv[:, v]))
    # triangle inequality
    assert np.all(vv[:, None, :] <= vv[:, :, None] + vv[None, :, :])
    assert t.matrix.shape == (g.n, g.n + g.m)


def test_girth_k4_and_petersen(petersen):
    from mixdim.families import Complete

    assert girth(build_family(Complete(4))) == 3
    assert girth(petersen) == 5 == min(simple_cycle_lengths(10, petersen.edges))


@pytest.mark.parametrize("n", range(3, 10))
def test_girth_cycles(n):
    assert girth(build_family(Cycle(n))) == n


@pytest.mark.parametrize("r, t", [(2, 2), (2, 5), (3, 3), (4, 3)])
def test_girth_grids(r, t):
    assert girth(build_family(Grid(r, t))) == 4


def test_girth_tree_is_marker():
    import random

    g = build_family(random_tree(9, random.Random(3)))
    assert girth(g) is ACYCLIC
    assert isinstance(girth(g), Acyclic) and not isinstance(girth(g), int)
    assert shortest_cycle(g) is None


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=8))
def test_girth_matches_cycle_enumeration(g):
    lengths = simple_cycle_lengths(g.n, g.edges)
    got = girth(g)
    if not lengths:
        assert got is ACYCLIC
    else:
        assert got == min(lengths)
        cyc = shortest_cycle(g)
        assert len(set(cyc)) == len(cyc) == got
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % got]) for i in range(got))
