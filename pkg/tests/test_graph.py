import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from banlinial import generators as gen
from banlinial.graph import (
    CubicGraph,
    Graph,
    GraphError,
    Split,
    SplitError,
    evaluate_split,
    induced_mono_graph,
    verify_ban_linial,
)

from conftest import to_nx


def test_cubic_graph_rejects_bad_input():
    with pytest.raises(GraphError):
        CubicGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    with pytest.raises(GraphError):
        Graph(((1,), ()))
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(1, 1)])


def test_adjacency_is_canonical():
    a = Graph.from_edges(3, [(2, 0), (0, 1)])
    b = Graph.from_edges(3, [(0, 1), (0, 2)])
    assert a == b
    assert a.adjacency == ((1, 2), (0,), (0,))


def test_k4_balanced_split():
    rep = evaluate_split(gen.k4(), Split({0, 1}, {2, 3}))
    assert rep.disc == 0
    assert rep.imbalance == 0
    assert rep.is_external
    assert rep.cut_size == 4
    assert rep.max_mono_component == 2


def test_everything_on_one_side():
    for g in (gen.k4(), gen.petersen(), gen.prism(5)):
        rep = evaluate_split(g, Split(set(), set(g.vertices())))
        assert not rep.is_external
        assert rep.offenders == tuple(g.vertices())
        assert rep.disc == -g.num_edges
        assert rep.imbalance == -g.n


def test_petersen_outer_inner():
    g = gen.petersen()
    rep = evaluate_split(g, Split(range(5), range(5, 10)))
    assert not rep.is_external
    assert len(rep.offenders) == 10
    assert rep.disc == 0 and rep.imbalance == 0
    # Both sides induce a 5-cycle.
    h = induced_mono_graph(g, Split(range(5), range(5, 10)))
    comps = [to_nx(h).subgraph(c) for c in nx.connected_components(to_nx(h))]
    assert sorted(len(c) for c in comps) == [5, 5]
    assert all(nx.is_isomorphic(c, nx.cycle_graph(5)) for c in comps)


def test_partial_split_is_rejected():
    with pytest.raises(SplitError):
        evaluate_split(gen.k4(), Split({0}, {1}))


def test_verify_ban_linial_k4():
    g = gen.k4()
    assert verify_ban_linial(g, Split({0, 1}, {2, 3}))
    assert not verify_ban_linial(g, Split({0}, {1, 2, 3}))
    assert evaluate_split(g, Split({0}, {1, 2, 3})).offenders == (1, 2, 3)


def test_petersen_has_no_external_bisection():
    g = gen.petersen()
    for xs in itertools.combinations(range(10), 5):
        assert not verify_ban_linial(g, Split.from_x(range(10), xs))


def test_induced_mono_graph():
    g = gen.k4()
    assert induced_mono_graph(g, Split({0, 1}, {2, 3})).edges() == [(0, 1), (2, 3)]
    assert induced_mono_graph(g, Split(set(range(4)), set())).adjacency == g.adjacency


def test_split_helpers():
    s = Split({0, 1}, {2})
    assert s.moved(1) == Split({0}, {1, 2})
    assert s.swapped() == Split({2}, {0, 1})
    assert s.extends(Split({0}, set()))
    assert not s.extends(Split({2}, set()))
    with pytest.raises(SplitError):
        Split({0}, {0})
    with pytest.raises(SplitError):
        Split.from_x(range(3), [5])


def test_internal_split():
    # Each K_{3,3} side is independent, so putting everything on one side is
    # internal and the bipartition is not.
    g = gen.k33()
    assert evaluate_split(g, Split(set(range(6)), set())).is_internal
    assert not evaluate_split(g, Split({0, 1, 2}, {3, 4, 5})).is_internal


def test_general_graph_definition():
    # Path 0-1-2: the middle vertex has degree 2, so one same-side neighbour
    # is allowed; a leaf has degree 1, so none is.
    p = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert evaluate_split(p, Split({0, 2}, {1})).is_external
    assert evaluate_split(p, Split({0, 1}, {2})).offenders == (0,)
    assert evaluate_split(p, Split({0, 1, 2}, set())).offenders == (0, 1, 2)


@st.composite
def graph_and_split(draw):
    n = draw(st.sampled_from([4, 6, 8, 10, 12, 14]))
    g = gen.random_cubic(n, draw(st.integers(0, 10_000)))
    xs = draw(st.sets(st.sampled_from(range(n))))
    return g, Split.from_x(range(n), xs)


@settings(max_examples=300, deadline=None)
@given(graph_and_split())
def test_split_invariants(gs):
    g, s = gs
    rep = evaluate_split(g, s)
    assert 3 * rep.imbalance == 2 * rep.disc
    if abs(rep.disc) <= 2:
        assert rep.imbalance == 0
    if rep.is_external:
        assert rep.max_mono_component <= 2
    assert rep.is_external == (not rep.offenders)
    assert rep.is_nearly_external == (len(rep.offenders) <= 1)
    e_x = sum(1 for u, v in g.edges() if u in s.x and v in s.x)
    e_y = sum(1 for u, v in g.edges() if u in s.y and v in s.y)
    assert rep.cut_size + e_x + e_y == g.num_edges
    assert rep.disc == e_x - e_y
    # Components checked against networkx.
    mono = to_nx(induced_mono_graph(g, s))
    assert rep.max_mono_component == max(len(c) for c in nx.connected_components(mono))
    sw = evaluate_split(g, s.swapped())
    assert (sw.disc, sw.imbalance) == (-rep.disc, -rep.imbalance)
    assert (sw.is_external, sw.is_internal, sw.offenders, sw.cut_size, sw.max_mono_component) == (
        rep.is_external, rep.is_internal, rep.offenders, rep.cut_size, rep.max_mono_component)
