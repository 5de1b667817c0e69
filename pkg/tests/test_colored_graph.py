import numpy as np
import pytest
from hypothesis import given

from conftest import coloured_graphs
from gemforge.colored_graph import (
    COLOUR_PAIRS,
    ColouredGraph,
    GraphError,
    census,
    is_bipartite,
    is_connected,
    is_gem,
    residues,
)
from gemforge.lins_mandel import LMParams, build

SWAP = ColouredGraph.from_involutions([[1, 0]] * 4)


def lm(*t):
    return build(LMParams(*t))


def test_rejects_fixed_points_and_non_involutions():
    with pytest.raises(GraphError):
        ColouredGraph.from_involutions([[0, 1]] + [[1, 0]] * 3)
    with pytest.raises(GraphError):
        ColouredGraph.from_involutions([[1, 2, 0, 3]] + [[1, 0, 3, 2]] * 3)
    with pytest.raises(GraphError):
        ColouredGraph(np.zeros((3, 2), dtype=int))


def test_table_is_read_only():
    with pytest.raises(ValueError):
        SWAP.involutions[0, 0] = 0


def test_residues_of_12_cycles():
    comps = residues(lm(3, 4, 1, 1), (1, 2))
    assert len(comps) == 3 and all(len(c) == 8 for c in comps)


def test_residues_01_of_poincare_graph():
    sizes = sorted(len(c) for c in residues(lm(5, 3, 2, 1), (0, 1)))
    assert sizes == [4] * 5 + [10]


def test_all_colours_give_one_component():
    assert len(residues(lm(5, 3, 2, 1), (0, 1, 2, 3))) == 1


def test_empty_colour_set_rejected():
    with pytest.raises(GraphError):
        residues(SWAP, ())


def test_census_examples():
    c = census(lm(3, 4, 1, 1))
    assert c[(1, 3)] == [4] * 6
    assert sorted(c[(2, 3)], reverse=True) == [6, 6, 4, 4, 4]
    assert census(SWAP) == {pair: [2] for pair in COLOUR_PAIRS}


@given(coloured_graphs())
def test_census_lengths_partition_vertices(g):
    for lengths in census(g).values():
        assert sum(lengths) == g.vertex_count
        assert all(L >= 2 and L % 2 == 0 for L in lengths)


@pytest.mark.parametrize("t", [(5, 3, 2, 1), (3, 7, 4, 1), (1, 1, 0, 0), (4, 6, 2, 3)])
def test_lins_mandel_graphs_are_bipartite(t):
    assert is_bipartite(lm(*t))


def test_two_vertex_graph_is_bipartite_gem():
    assert is_bipartite(SWAP)
    assert is_gem(SWAP)


def test_triangle_is_not_bipartite():
    # 0 -c0- 1 -c1- 2 -c2- 0
    g = ColouredGraph.from_involutions([
        [1, 0, 3, 2, 5, 4],
        [5, 2, 1, 4, 3, 0],
        [2, 4, 0, 5, 1, 3],
        [1, 0, 3, 2, 5, 4],
    ])
    assert not is_bipartite(g)


@given(coloured_graphs(max_half=4))
def test_bipartite_matches_brute_force(g):
    rows = g.rows()
    n = g.vertex_count
    edges = {(v, rows[k][v]) for k in range(4) for v in range(n)}
    expected = any(all((mask >> a & 1) != (mask >> b & 1) for a, b in edges) for mask in range(1 << n))
    assert is_bipartite(g) == expected


@pytest.mark.parametrize("t,expected", [((5, 3, 2, 1), True), ((3, 4, 1, 1), True), ((4, 3, 1, 2), False)])
def test_is_gem_examples(t, expected):
    assert is_gem(lm(*t)) is expected


def test_is_gem_rejects_disconnected():
    g = ColouredGraph.from_involutions([[1, 0, 3, 2]] * 4)
    assert not is_connected(g)
    with pytest.raises(GraphError):
        is_gem(g)
