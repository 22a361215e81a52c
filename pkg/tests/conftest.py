import itertools

import pytest
from hypothesis import strategies as st

from mixdim import build_graph
from mixdim.families import Complete, CompleteBipartite, Cycle, Grid, Path, build_family

from oracles import petersen_edges


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    others = [p for p in itertools.combinations(range(n), 2) if p not in edges]
    if others:
        extra = draw(st.lists(st.sampled_from(others), unique=True, max_size=len(others)))
        edges.update(extra)
    perm = draw(st.permutations(range(n)))
    return build_graph(n, [(perm[u], perm[v]) for u, v in edges])


@pytest.fixture
def petersen():
    return build_graph(10, petersen_edges())


@pytest.fixture
def p3():
    return build_family(Path(3))


@pytest.fixture
def p4():
    return build_family(Path(4))


@pytest.fixture
def c4():
    return build_family(Cycle(4))


@pytest.fixture
def k3():
    return build_family(Complete(3))


@pytest.fixture
def k23():
    return build_family(CompleteBipartite(2, 3))


def fixture_corpus():
    """Named small graphs shared by the determinism and oracle checks."""
    out = {}
    for n in range(2, 9):
        out[f"path:{n}"] = build_family(Path(n))
    for n in range(3, 10):
        out[f"cycle:{n}"] = build_family(Cycle(n))
    for n in range(2, 8):
        out[f"complete:{n}"] = build_family(Complete(n))
    for r, t in itertools.product(range(2, 5), repeat=2):
        out[f"kb:{r},{t}"] = build_family(CompleteBipartite(r, t))
    for r, t in itertools.product(range(2, 4), range(2, 5)):
        out[f"grid:{r},{t}"] = build_family(Grid(r, t))
    out["petersen"] = build_graph(10, petersen_edges())
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
