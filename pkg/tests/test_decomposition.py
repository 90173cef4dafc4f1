import itertools

import networkx as nx
import pytest

from banlinial import generators as gen
from banlinial.decomposition import (
    Budget,
    BudgetExhausted,
    CertificateError,
    EdgeColouring3,
    NowhereZeroFlow,
    TreeCycleDecomposition,
    find_3_edge_colouring,
    find_cubic_tree_bipartite_complement,
    find_nowhere_zero_flow,
    find_tree_cycle_decomposition,
)
from banlinial.graph import CubicGraph

from conftest import corpus_upto, to_nx

K4_STAR = TreeCycleDecomposition(frozenset({(0, 1), (0, 2), (0, 3)}),
                                 frozenset({(1, 2), (2, 3), (1, 3)}))


def test_k4_tree_cycle():
    d = find_tree_cycle_decomposition(gen.k4())
    d.validate(gen.k4())
    t = d.tree()
    assert len(t.internal()) == 1
    assert len(d.cycle_edges) == 3
    assert set(d.cycle_order()) == set(t.leaves())


def test_k33_tree_cycle():
    g = gen.k33()
    d = find_tree_cycle_decomposition(g)
    assert d is not None
    d.validate(g)
    TreeCycleDecomposition(frozenset({(0, 3), (0, 4), (0, 5), (1, 3), (2, 3)}),
                           frozenset({(1, 4), (4, 2), (2, 5), (5, 1)})).validate(g)


def test_petersen_tree_cycle_is_checked():
    g = gen.petersen()
    d = find_tree_cycle_decomposition(g)
    assert d is not None
    d.validate(g)
    assert nx.is_tree(to_nx(g).edge_subgraph(d.tree_edges))


def test_tree_cycle_validation_errors():
    g = gen.k4()
    with pytest.raises(CertificateError):
        TreeCycleDecomposition(frozenset({(0, 1), (0, 2)}), frozenset({(1, 2), (2, 3), (1, 3)})).validate(g)
    with pytest.raises(CertificateError):
        TreeCycleDecomposition(frozenset({(0, 1), (0, 2), (0, 3), (1, 2)}),
                               frozenset({(2, 3), (1, 3)})).validate(g)


def _tree_cycle_exists(g):
    length = g.n // 2 + 1
    for cyc in nx.simple_cycles(to_nx(g), length_bound=length):
        if len(cyc) != length:
            continue
        cyc_edges = {frozenset((cyc[i], cyc[(i + 1) % length])) for i in range(length)}
        rest = [e for e in g.edges() if frozenset(e) not in cyc_edges]
        if nx.is_tree(nx.Graph(rest)) and nx.Graph(rest).number_of_nodes() == g.n:
            return True
    return False


def test_tree_cycle_search_is_complete_on_corpus():
    for g in corpus_upto(10):
        assert (find_tree_cycle_decomposition(g) is not None) == _tree_cycle_exists(g)


def _bipartite_complement_tree_exists(g):
    h = to_nx(g)
    edges = g.edges()
    for r in range(1, len(edges) + 1):
        for sub in itertools.combinations(edges, r):
            t = nx.Graph(sub)
            if not nx.is_tree(t) or any(d not in (1, 3) for _, d in t.degree()):
                continue
            rest = h.copy()
            rest.remove_edges_from(sub)
            if nx.is_bipartite(rest):
                return True
    return False


def test_bipartite_complement_search_matches_brute_force():
    for g in corpus_upto(8):
        t = find_cubic_tree_bipartite_complement(g)
        assert (t is not None) == _bipartite_complement_tree_exists(g)
        if t is not None:
            rest = to_nx(g)
            rest.remove_edges_from(t.edges())
            assert nx.is_bipartite(rest)


def test_bipartite_complement_examples():
    assert find_cubic_tree_bipartite_complement(gen.k4()) is None
    for g in (gen.prism(3), gen.k33(), gen.prism(5), gen.petersen()):
        t = find_cubic_tree_bipartite_complement(g)
        assert t is not None
        rest = to_nx(g)
        rest.remove_edges_from(t.edges())
        assert nx.is_bipartite(rest)


def _three_edge_colourable(g):
    # A cubic graph is 3-edge-colourable iff removing some perfect matching
    # leaves only even cycles.
    edges = g.edges()
    for m in itertools.combinations(edges, g.n // 2):
        if len({v for e in m for v in e}) == g.n:
            rest = to_nx(g)
            rest.remove_edges_from(m)
            if nx.is_bipartite(rest):
                return True
    return False


def test_three_edge_colouring_examples():
    ec = find_3_edge_colouring(gen.k4())
    assert sorted(ec.matching(c) for c in (1, 2, 3)) == [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]]
    assert find_3_edge_colouring(gen.petersen()) is None
    find_3_edge_colouring(gen.k33()).validate(gen.k33())


def test_three_edge_colouring_matches_matching_oracle():
    for g in corpus_upto(10):
        ec = find_3_edge_colouring(g)
        assert (ec is not None) == _three_edge_colourable(g)
        if ec is not None:
            ec.validate(g)
            for c in (1, 2, 3):
                assert nx.is_perfect_matching(to_nx(g), ec.matching(c))


def test_colouring_validation_errors():
    g = gen.k4()
    with pytest.raises(CertificateError):
        EdgeColouring3({e: 1 for e in g.edges()}).validate(g)
    with pytest.raises(CertificateError):
        EdgeColouring3({(0, 1): 1}).validate(g)


def _independent_flow_check(g, f: NowhereZeroFlow):
    net = {v: 0 for v in g.vertices()}
    for e, (a, b) in f.arcs.items():
        assert {a, b} == set(e)
        assert 1 <= f.values[e] < f.k
        net[a] -= f.values[e]
        net[b] += f.values[e]
    assert all(x == 0 for x in net.values())


def test_flow_examples():
    f = find_nowhere_zero_flow(gen.k4(), 4)
    _independent_flow_check(gen.k4(), f)
    assert find_nowhere_zero_flow(gen.petersen(), 4) is None
    f = find_nowhere_zero_flow(gen.petersen(), 5)
    _independent_flow_check(gen.petersen(), f)
    assert find_nowhere_zero_flow(gen.k4(), 3) is None  # K4 is not bipartite
    _independent_flow_check(gen.k33(), find_nowhere_zero_flow(gen.k33(), 3))


def test_four_flow_iff_three_edge_colourable():
    for g in corpus_upto(10):
        assert (find_nowhere_zero_flow(g, 4) is None) == (find_3_edge_colouring(g) is None)


def test_bridge_means_no_flow():
    for g in corpus_upto(10):
        if nx.has_bridges(to_nx(g)):
            assert find_nowhere_zero_flow(g, 6) is None


def test_flow_order_range():
    with pytest.raises(ValueError):
        find_nowhere_zero_flow(gen.k4(), 7)
    with pytest.raises(ValueError):
        find_nowhere_zero_flow(gen.k4(), 1)


def test_flow_validation_errors():
    g = gen.k4()
    f = find_nowhere_zero_flow(g, 4)
    e = min(f.values)
    bad = NowhereZeroFlow(4, f.arcs, {**f.values, e: f.values[e] % 3 + 1})
    with pytest.raises(CertificateError):
        bad.validate(g)
    with pytest.raises(CertificateError):
        NowhereZeroFlow(4, f.arcs, {**f.values, e: 4}).validate(g)


def test_from_signed_reverses_negative_arcs():
    f = NowhereZeroFlow.from_signed(3, {(0, 1): -2, (1, 2): 1})
    assert f.arcs[(0, 1)] == (1, 0) and f.values[(0, 1)] == 2
    assert f.arcs[(1, 2)] == (1, 2)


def test_budget_exhaustion_is_distinct_from_none():
    g = gen.petersen()
    with pytest.raises(BudgetExhausted):
        find_3_edge_colouring(g, Budget(5))
    with pytest.raises(BudgetExhausted):
        find_nowhere_zero_flow(g, 4, 10)
    with pytest.raises(BudgetExhausted):
        find_tree_cycle_decomposition(g, 3)
    with pytest.raises(BudgetExhausted):
        find_cubic_tree_bipartite_complement(gen.k4(), 1)
    assert find_3_edge_colouring(g, Budget(10**6)) is None


def test_searches_are_deterministic():
    g = gen.random_cubic(14, 5)
    assert find_tree_cycle_decomposition(g) == find_tree_cycle_decomposition(CubicGraph(g.adjacency))
    assert find_nowhere_zero_flow(g, 5) == find_nowhere_zero_flow(g, 5)
