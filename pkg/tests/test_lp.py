import pytest
from hypothesis import given, settings

from mixdim.families import Complete, Cycle, Path, build_family
from mixdim.lp import brute_force_optimum, export_ilp, parse_lp
from mixdim.metrics import Variant
from mixdim.solver import solve

from conftest import connected_graphs


def test_p2_model_text():
    text = export_ilp(build_family(Path(2)))
    assert text == (
        "\\ mdim model: n=2 m=1\n"
        "Minimize\n"
        " obj: y0 + y1\n"
        "Subject To\n"
        " p_0_1: y0 + y1 >= 1\n"
        " p_0_2: y1 >= 1\n"
        " p_1_2: y0 >= 1\n"
        "Binary\n"
        " y0 y1\n"
        "End\n"
    )
    assert brute_force_optimum(text)[0] == 2


def test_coefficients_are_distance_gaps():
    # P_3: d(v0, v2) seen from v0 and v2 is 2
    objective, rows, binaries = parse_lp(export_ilp(build_family(Path(3))))
    row = dict((name, coeffs) for name, coeffs, _ in rows)["p_0_2"]
    assert row == {"y0": 2, "y2": 2}
    assert binaries == ["y0", "y1", "y2"]
    assert objective == {"y0": 1, "y1": 1, "y2": 1}


@pytest.mark.parametrize(
    "graph, want",
    [(build_family(Path(3)), 2), (build_family(Cycle(4)), 3), (build_family(Complete(3)), 3)],
)
def test_model_optimum(graph, want):
    assert brute_force_optimum(export_ilp(graph))[0] == want == solve(graph).value


def test_byte_stable():
    g = build_family(Cycle(5))
    assert export_ilp(g) == export_ilp(build_family(Cycle(5)))


def test_long_rows_wrap_and_parse():
    g = build_family(Complete(12))
    text = export_ilp(g, Variant.DIM)
    _, rows, binaries = parse_lp(text)
    assert len(binaries) == 12 and len(rows) == 66
    assert max(len(line) for line in text.splitlines()) < 120


@settings(max_examples=25, deadline=None)
@given(connected_graphs(max_n=6))
def test_model_optimum_matches_solver(g):
    for variant in Variant:
        assert brute_force_optimum(export_ilp(g, variant))[0] == solve(g, variant).value
