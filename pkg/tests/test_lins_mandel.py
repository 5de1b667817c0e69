import pytest
from hypothesis import given
from hypothesis import strategies as st

from gemforge.colored_graph import GraphError, census, is_bipartite, is_connected, residues
from gemforge.lins_mandel import (
    LMParams,
    all_params,
    build,
    coords,
    epsilon,
    graphs_equal,
    index,
    is_gem_parametric,
    mu,
    predicted_census,
)

params_st = st.builds(
    LMParams, st.integers(1, 6), st.integers(1, 6), st.integers(-20, 20), st.integers(-20, 20)
)


def test_params_canonical_representatives():
    P = LMParams(5, 3, -2, 7)
    assert (P.q, P.m) == (4, 2)
    assert LMParams(5, 3, 2, 1).sign_q == 1
    assert LMParams(5, 3, 1, 1).sign_q == 4
    with pytest.raises(GraphError):
        LMParams(0, 3, 1, 1)


def test_mu_values():
    assert mu(1, 3) == 1
    assert mu(0, 3) == -1
    assert [mu(j, 3) for j in range(6)] == [-1, 1, 1, 1, -1, -1]


@given(st.integers(1, 10), st.integers(-50, 50))
def test_mu_antisymmetric_under_half_turn(p, j):
    assert mu(j + p, p) == -mu(j, p)
    assert mu(1 - j, p) == -mu(j, p)


def test_epsilon_zero_hand_evaluated():
    # mu(0-2) = mu(4) = -1 for p = 3, so (0 - 1, 1 - 0 + 4)
    assert epsilon(0, (0, 0), LMParams(5, 3, 2, 1)) == (4, 5)


@pytest.mark.parametrize("t", [(5, 3, 2, 1), (3, 4, 1, 1), (2, 7, 3, 1), (6, 2, 1, 5)])
def test_epsilon_three_at_column_one(t):
    assert epsilon(3, (0, 1), LMParams(*t)) == (1, 0)


@given(params_st, st.integers(0, 3), st.data())
def test_epsilon_is_involution(P, k, data):
    v = (data.draw(st.integers(0, P.n - 1)), data.draw(st.integers(0, 2 * P.p - 1)))
    w = epsilon(k, v, P)
    assert w != v
    assert epsilon(k, w, P) == v


def test_index_roundtrip():
    P = LMParams(5, 3, 2, 1)
    for v in range(30):
        assert index(*coords(v, P), P) == v


@pytest.mark.parametrize("t,size", [((5, 3, 2, 1), 30), ((3, 7, 4, 1), 42), ((1, 1, 0, 0), 2)])
def test_build_sizes(t, size):
    g = build(LMParams(*t))
    assert g.vertex_count == size
    assert is_connected(g) and is_bipartite(g)


@given(params_st)
def test_build_has_n_cycles_of_length_2p(P):
    g = build(P)
    assert sorted(len(c) for c in residues(g, (1, 2))) == [2 * P.p] * P.n
    assert is_connected(g) and is_bipartite(g)


@given(params_st)
def test_twin_tuple_gives_identical_graph(P):
    assert graphs_equal(P, P.twin())
    assert graphs_equal(P, P)


def test_graphs_equal_detects_different_tables():
    assert not graphs_equal(LMParams(3, 4, 1, 1), LMParams(3, 4, 3, 1))
    assert not graphs_equal(LMParams(3, 4, 1, 1), LMParams(4, 3, 1, 1))


def test_predicted_census_examples():
    c = predicted_census(LMParams(3, 4, 1, 1))
    assert c[(0, 1)] == [4, 4, 4, 6, 6]
    assert predicted_census(LMParams(5, 3, 2, 1))[(0, 3)] == [6] * 5


def test_predicted_census_refuses_non_coprime():
    with pytest.raises(GraphError):
        predicted_census(LMParams(3, 4, 2, 1))


@pytest.mark.parametrize("t", [t for t in all_params(5, 5) if t.coprime_pq])
def test_predicted_census_matches_graph(t):
    assert predicted_census(t) == census(build(t))


@pytest.mark.parametrize("t,expected", [((3, 4, 1, 2), True), ((5, 3, 2, 1), True), ((4, 3, 1, 2), False),
                                        ((4, 3, 1, 0), True), ((4, 3, 1, 3), True), ((4, 3, 2, 1), True)])
def test_gem_parametric_examples(t, expected):
    assert is_gem_parametric(LMParams(*t)) is expected


def test_gem_parametric_reduces_common_factor():
    # G(3,6,2,m) is read through (3,3,1,m): gem iff m in {0, -1}
    assert [is_gem_parametric(LMParams(3, 6, 2, m)) for m in range(3)] == [True, False, True]
