"""Turning certificates into Ban-Linial splits.

Every public solver checks its own output with :func:`verify_ban_linial`
before returning it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .decomposition import (
    CertificateError,
    EdgeColouring3,
    NowhereZeroFlow,
    TreeCycleDecomposition,
)
from .graph import (
    CubicGraph,
    Graph,
    Split,
    SplitError,
    connected_components,
    discrepancy,
    evaluate_split,
    two_colouring,
    verify_ban_linial,
)
from .trees import CherryPair, CubicTree, find_cherry_pairs, split_cubic_tree_rooted, split_cubic_tree_unrooted

log = logging.getLogger(__name__)


def repair_nearly_external(g: CubicGraph, s: Split) -> Split:
    """Turn a nearly external bisection into an external split with
    imbalance in {-2, 0, 2}.

    While some vertex ``y`` has two same-side neighbours, move it across. If
    that leaves a vertex ``x`` with two same-side neighbours (necessarily
    ``y``'s only neighbour on its new side), move ``x`` back the other way.
    The result is again a nearly external bisection with a cut larger by 2,
    so the loop ends within ``e(G)/2`` rounds.
    """
    rep = evaluate_split(g, s)
    if not rep.is_nearly_external or rep.imbalance != 0:
        raise SplitError("repair needs a nearly external bisection")
    for _ in range(g.num_edges // 2 + 1):
        if rep.is_external:
            return s
        (y,) = rep.offenders
        moved = s.moved(y)
        moved_rep = evaluate_split(g, moved)
        if moved_rep.is_external:
            assert abs(moved_rep.imbalance) == 2
            return moved
        (x,) = moved_rep.offenders
        assert moved.in_x(x) == moved.in_x(y) and g.has_edge(x, y)
        swapped = moved.moved(x)
        new_rep = evaluate_split(g, swapped)
        assert new_rep.imbalance == 0 and new_rep.is_nearly_external
        assert new_rep.cut_size > rep.cut_size
        s, rep = swapped, new_rep
    raise AssertionError("repair loop did not terminate")


def _finish(g: CubicGraph, s: Split) -> Split:
    rep = evaluate_split(g, s)
    assert abs(rep.disc) <= 2 and rep.imbalance == 0, rep
    assert rep.is_nearly_external, rep
    out = repair_nearly_external(g, s)
    assert verify_ban_linial(g, out)
    return out


def _check_subtree(g: Graph, t: CubicTree) -> None:
    for u, v in t.edges():
        if not (0 <= u < g.n and 0 <= v < g.n and g.has_edge(u, v)):
            raise CertificateError(f"tree edge {u}-{v} is not an edge of the graph")
    for v in t.internal():
        if g.degree(v) != 3:
            raise CertificateError(f"internal tree vertex {v} does not have degree 3 in G")


def solve_tree_bipartite(g: CubicGraph, t: CubicTree, epsilon: int = 1) -> Split:
    """Ban-Linial split from a cubic subtree ``t`` with ``G - E(t)`` bipartite.

    Properly 2-colour ``G - E(t)``, keep those colours off the tree's
    interior, colour the interior with the unrooted tree splitter, then
    repair the resulting nearly external bisection.
    """
    _check_subtree(g, t)
    colour = two_colouring(g.without_edges(t.edges()))
    if colour is None:
        raise CertificateError("G - E(T) is not bipartite")
    base = Split.from_colouring(colour)
    leaves = Split.from_colouring({v: colour[v] for v in t.leaves()})
    if len(t) == 2:
        inner = leaves
    else:
        inner = split_cubic_tree_unrooted(t, leaves, epsilon)
    s = base.restrict(set(g.vertices()) - set(t.vertices())) | inner
    # G - E(T) is properly coloured, so only tree edges can be monochromatic.
    assert discrepancy(g, s) == discrepancy(t, inner)
    return _finish(g, s)


@dataclass(frozen=True)
class OddCycleGadget:
    """Odd cycle plus the apex ``u`` of a cherry pair ``v, v2`` on it, coloured
    with ``v, v2`` on X, ``u`` on Y and one monochromatic edge ``v r`` on X."""

    cycle: tuple[int, ...]
    v: int
    v2: int
    u: int
    r: int
    split: Split

    def edges(self) -> list[tuple[int, int]]:
        m = len(self.cycle)
        es = [tuple(sorted((self.cycle[i], self.cycle[(i + 1) % m]))) for i in range(m)]
        return es + [tuple(sorted((self.u, self.v))), tuple(sorted((self.u, self.v2)))]


def build_odd_cycle_gadget(cycle: list[int], t: CubicTree, cherry: CherryPair) -> OddCycleGadget:
    m = len(cycle)
    if m % 2 == 0:
        raise CertificateError("gadget needs an odd cycle")
    if cherry.u not in cycle or cherry.u2 not in cycle:
        raise CertificateError("cherry leaves must lie on the cycle")
    if cherry.apex in cycle:
        raise CertificateError("cherry apex must not lie on the cycle")
    v, v2, u = cherry.u, cherry.u2, cherry.apex
    i = cycle.index(v)
    j = (cycle.index(v2) - i) % m
    # Walking away from r, colours alternate starting with v on X; v2 sits at
    # distance j forward or m - j backward, and exactly one is even.
    step = 1 if j % 2 == 0 else -1
    walk = [cycle[(i + step * d) % m] for d in range(m)]
    colour = {w: d % 2 == 0 for d, w in enumerate(walk)}
    colour[u] = False
    r = walk[-1]
    gadget = OddCycleGadget(tuple(cycle), v, v2, u, r, Split.from_colouring(colour))
    h = Graph.from_edges(max(colour) + 1, gadget.edges())
    mono = [(a, b) for a, b in gadget.edges() if colour[a] == colour[b]]
    assert mono == [tuple(sorted((v, r)))] and colour[v] and colour[v2] and r != u
    assert discrepancy(h, gadget.split) == 1
    return gadget


def solve_tree_cycle(g: CubicGraph, d: TreeCycleDecomposition) -> Split:
    """Ban-Linial split from a decomposition into a spanning cubic tree and a
    cycle. Even cycles reduce to :func:`solve_tree_bipartite`; odd cycles use
    the gadget and the rooted tree splitter with sign -1. Graphs on 4
    vertices go to the exhaustive oracle."""
    d.validate(g)
    t = d.tree()
    if len(d.cycle_edges) % 2 == 0:
        return solve_tree_bipartite(g, t)
    if g.n < 6:
        from .oracle import brute_force_ban_linial
        return brute_force_ban_linial(g).witness
    cycle = d.cycle_order()
    cherry = find_cherry_pairs(t)[0]
    gadget = build_odd_cycle_gadget(cycle, t, cherry)
    sub = t.without((gadget.v, gadget.v2))
    leaves = gadget.split.restrict(sub.leaves())
    if gadget.r == gadget.v2:
        inner = split_cubic_tree_unrooted(sub, leaves, -1)
    else:
        inner = split_cubic_tree_rooted(sub, leaves, gadget.r, -1)
    s = gadget.split | inner
    assert s.is_total(g)
    assert discrepancy(g, s) == discrepancy(sub, inner) + 1
    return _finish(g, s)


def split_from_3_edge_colouring(g: CubicGraph, ec: EdgeColouring3) -> Split:
    """External bisection: a bipartition of the even 2-factor ``G - M_3``."""
    ec.validate(g)
    factor = Graph.from_edges(g.n, ec.matching(1) + ec.matching(2))
    colour = two_colouring(factor)
    assert colour is not None
    s = Split.from_colouring(colour)
    rep = evaluate_split(g, s)
    assert rep.is_external and rep.imbalance == 0
    return s


def _strongly_connected(g: Graph, arcs) -> bool:
    out: dict[int, list[int]] = {v: [] for v in g.vertices()}
    back: dict[int, list[int]] = {v: [] for v in g.vertices()}
    for a, b in arcs:
        out[a].append(b)
        back[b].append(a)

    def reach(adj):
        seen, stack = {0}, [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == g.n

    return reach(out) and reach(back)


def flow_to_k_bisection(g: CubicGraph, f: NowhereZeroFlow) -> Split:
    """(k-2)-bisection from a positive nowhere-zero k-flow: X holds the
    vertices of out-degree 1, Y those of in-degree 1."""
    f.validate(g)
    arcs = list(f.arcs.values())
    assert _strongly_connected(g, arcs)
    out_deg = {v: f.out_degree(v) for v in g.vertices()}
    bad = [v for v, dv in out_deg.items() if dv not in (1, 2)]
    if bad:
        raise CertificateError(f"vertices {bad} have out-degree outside {{1, 2}}")
    s = Split.from_x(g.vertices(), (v for v, dv in out_deg.items() if dv == 1))
    assert len(s.x) == len(s.y)
    for side, is_x in ((s.x, True), (s.y, False)):
        mono = Graph.from_edges(g.n, [(a, b) for a, b in g.edges() if a in side and b in side])
        for comp in connected_components(mono):
            if comp[0] not in side:
                continue
            cs = set(comp)
            n_edges = sum(1 for a, b in mono.edges() if a in cs)
            assert n_edges == len(comp) - 1, "monochromatic component is not a tree"
            boundary = [(a, b) for a, b in arcs if (a in cs) != (b in cs)]
            # X components send one arc out and receive |H|+1; Y mirrors it.
            lone = [(a, b) for a, b in boundary if (a in cs) == is_x]
            assert len(lone) == 1 and len(boundary) - 1 == len(comp) + 1
            assert len(comp) <= f.k - 2
    return s
