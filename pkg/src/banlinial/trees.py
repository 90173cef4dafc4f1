"""Splitting cubic trees with controlled discrepancy.

Both splitters take a cubic tree, a colouring of its leaves and a sign
``epsilon``, and colour the internal vertices so that

* unrooted: ``disc`` lies in ``epsilon * {0, 1, 2}`` and the monochromatic
  subgraph has at most one vertex of degree above one;
* rooted (an X-side leaf ``r`` is distinguished): ``disc`` lies in
  ``epsilon * {-1, 0, 1, 2, 3}`` and either ``r`` has monochromatic degree 1
  and every vertex has monochromatic degree at most 1, or ``r`` has
  monochromatic degree 0 and at most one vertex has degree above one.

The recursion removes a same-coloured cherry pair when there is one, solves
trees with at most 8 vertices by exhaustion, and otherwise shrinks the tree
with one of two local reductions. Every return value is checked against the
postconditions above; a failed check falls back to exhaustive search.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .graph import GraphError, Split, SplitError, connected_components

log = logging.getLogger(__name__)

UNROOTED_DISC = (0, 1, 2)
ROOTED_DISC = (-1, 0, 1, 2, 3)
EXHAUSTIVE_BOUND = 16


class LemmaFailure(AssertionError):
    """A tree split violated its postconditions and no fallback could repair it."""


class CubicTree:
    """A tree in which every vertex has degree 1 or 3.

    Vertex labels are arbitrary ints, so a tree can live inside a larger
    graph and keep that graph's vertex ids.
    """

    __slots__ = ("_adj",)

    def __init__(self, adjacency: Mapping[int, Iterable[int]]):
        adj = {v: tuple(sorted(nbrs)) for v, nbrs in adjacency.items()}
        for v, nbrs in adj.items():
            if len(nbrs) not in (1, 3):
                raise GraphError(f"tree vertex {v} has degree {len(nbrs)}")
            for u in nbrs:
                if u not in adj or v not in adj[u]:
                    raise GraphError(f"tree adjacency not symmetric on {v}-{u}")
        self._adj = adj
        n_edges = sum(len(nbrs) for nbrs in adj.values()) // 2
        if len(adj) < 2 or n_edges != len(adj) - 1 or len(connected_components(self)) != 1:
            raise GraphError("not a tree")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]]) -> "CubicTree":
        adj: dict[int, list[int]] = {}
        for u, v in edges:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        return cls(adj)

    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __eq__(self, other) -> bool:
        return isinstance(other, CubicTree) and self._adj == other._adj

    def __repr__(self) -> str:
        return f"CubicTree({self.edges()})"

    def leaves(self) -> list[int]:
        return [v for v in self.vertices() if len(self._adj[v]) == 1]

    def internal(self) -> list[int]:
        return [v for v in self.vertices() if len(self._adj[v]) == 3]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self.vertices() for v in self._adj[u] if u < v]

    def without(self, vertices: Iterable[int]) -> "CubicTree":
        drop = set(vertices)
        return CubicTree({v: [u for u in nbrs if u not in drop]
                          for v, nbrs in self._adj.items() if v not in drop})


@dataclass(frozen=True)
class CherryPair:
    """Two leaves ``u < u2`` sharing the neighbour ``apex``."""

    u: int
    u2: int
    apex: int


def find_cherry_pairs(t: CubicTree) -> list[CherryPair]:
    """All cherry pairs, ordered by apex then leaves."""
    pairs = []
    for v in t.vertices():
        if t.degree(v) != 3:
            continue
        leaves = [u for u in t.neighbors(v) if t.degree(u) == 1]
        for a, b in itertools.combinations(leaves, 2):
            pairs.append(CherryPair(a, b, v))
    return pairs


# -- postconditions ---------------------------------------------------------

def _mono_degree(t: CubicTree, col: Mapping[int, bool]) -> dict[int, int]:
    return {v: sum(1 for u in t.neighbors(v) if col[u] == col[v]) for v in t.vertices()}


def _disc(t: CubicTree, col: Mapping[int, bool]) -> int:
    d = 0
    for u, v in t.edges():
        if col[u] == col[v]:
            d += 1 if col[u] else -1
    return d


def _extends(col: Mapping[int, bool], leaf_col: Mapping[int, bool]) -> bool:
    return all(col.get(v) == c for v, c in leaf_col.items())


def _unrooted_ok(t, col, leaf_col, eps) -> bool:
    if set(col) != set(t.vertices()) or not _extends(col, leaf_col):
        return False
    if _disc(t, col) not in {eps * k for k in UNROOTED_DISC}:
        return False
    return sum(1 for d in _mono_degree(t, col).values() if d > 1) <= 1


def _rooted_ok(t, col, leaf_col, root, eps) -> bool:
    if set(col) != set(t.vertices()) or not _extends(col, leaf_col):
        return False
    if _disc(t, col) not in {eps * k for k in ROOTED_DISC}:
        return False
    mono = _mono_degree(t, col)
    if mono[root] == 1:
        return max(mono.values()) <= 1
    if mono[root] == 0:
        return sum(1 for d in mono.values() if d > 1) <= 1
    return False


def check_unrooted(t: CubicTree, s: Split, leaf_split: Split, epsilon: int) -> bool:
    """Whether ``s`` satisfies the unrooted splitting postconditions."""
    return _unrooted_ok(t, s.colouring(), leaf_split.colouring(), epsilon)


def check_rooted(t: CubicTree, s: Split, leaf_split: Split, root: int, epsilon: int) -> bool:
    """Whether ``s`` satisfies the rooted splitting postconditions."""
    return _rooted_ok(t, s.colouring(), leaf_split.colouring(), root, epsilon)


# -- exhaustive search ------------------------------------------------------

def _exhaust(t, leaf_col, eps, root=None) -> dict[int, bool] | None:
    inner = t.internal()
    for bits in itertools.product((True, False), repeat=len(inner)):
        col = dict(leaf_col)
        col.update(zip(inner, bits))
        ok = _unrooted_ok(t, col, leaf_col, eps) if root is None else _rooted_ok(t, col, leaf_col, root, eps)
        if ok:
            return col
    return None


def exhaustive_tree_split(
    t: CubicTree,
    leaf_split: Split,
    epsilon: int,
    rooted_at: int | None = None,
    max_vertices: int = EXHAUSTIVE_BOUND,
) -> Split | None:
    """First colouring (X before Y, internal vertices in id order) meeting the
    unrooted postconditions, or the rooted ones when ``rooted_at`` is given.

    Returns ``None`` only when no colouring qualifies.
    """
    if len(t) > max_vertices:
        raise ValueError(f"tree has {len(t)} vertices, exhaustive bound is {max_vertices}")
    leaf_col = _validate(t, leaf_split, epsilon, rooted_at)
    col = _exhaust(t, leaf_col, epsilon, rooted_at)
    return None if col is None else Split.from_colouring(col)


# -- recursive construction -------------------------------------------------

def _validate(t, leaf_split, eps, root) -> dict[int, bool]:
    if eps not in (1, -1):
        raise ValueError(f"epsilon must be +1 or -1, got {eps}")
    if leaf_split.domain != frozenset(t.leaves()):
        raise SplitError("leaf split must assign exactly the leaves of the tree")
    if root is not None:
        if root not in t or t.degree(root) != 1:
            raise SplitError(f"root {root} is not a leaf of the tree")
        if root not in leaf_split.x:
            raise SplitError(f"root {root} must be on the X side")
    return leaf_split.colouring()


def _same_colour_cherry(t, col) -> CherryPair | None:
    for p in find_cherry_pairs(t):
        if col[p.u] == col[p.u2]:
            return p
    return None


def _reductions(t, col):
    """Candidate reductions, in id order.

    Every cherry pair is known to be two-coloured. Deleting each such pair
    and marking its apex red leaves a cubic tree whose cherry pairs each
    contain a red vertex. Two red cherries at ``z`` give reduction 1 about
    ``z``; one red cherry ``w`` and an original leaf ``l`` at ``z`` give
    reduction 2 about ``z``.
    """
    red = {}
    for p in find_cherry_pairs(t):
        red[p.apex] = (p.u, p.u2)
    contracted = t.without(leaf for pair in red.values() for leaf in pair)
    for p in find_cherry_pairs(contracted):
        a, b, z = p.u, p.u2, p.apex
        if a in red and b in red:
            removed = {a, b, *red[a], *red[b]}
            yield ("r1", z, a, b), removed
        elif a in red or b in red:
            w, leaf = (a, b) if a in red else (b, a)
            yield ("r2", z, w, leaf), {leaf, w, *red[w]}
        else:
            raise LemmaFailure("contracted tree has a cherry pair without a red vertex")


def _apply_reduction(t, col, eps, red_step, recurse):
    kind, v, p, q = red_step
    if kind == "r1":
        # v's neighbours a=p and b=q each carry a two-coloured cherry pair.
        # v becomes a leaf; recurse with the opposite sign, then colour a and
        # b on the epsilon side, which shifts disc by 2*epsilon.
        a, b = p, q
        removed = {a, b, *(u for u in t.neighbors(a) if t.degree(u) == 1),
                   *(u for u in t.neighbors(b) if t.degree(u) == 1)}
        sub = t.without(removed)
        sub_col = {u: c for u, c in col.items() if u in sub}
        sub_col[v] = eps < 0
        out = recurse(sub, sub_col, -eps)
        out.update((u, col[u]) for u in removed if u in col)
        out[a] = out[b] = eps > 0
        return out
    # Reduction 2: v has a leaf l=q, a cherry-bearing neighbour w=p and a
    # third, non-leaf neighbour u. v takes l's colour and becomes a leaf.
    w, leaf = p, q
    (u,) = [x for x in t.neighbors(v) if x not in (w, leaf)]
    cherries = [x for x in t.neighbors(w) if t.degree(x) == 1]
    removed = {leaf, w, *cherries}
    sub = t.without(removed)
    c = col[leaf]
    sub_col = {x: cc for x, cc in col.items() if x in sub}
    sub_col[v] = c
    out = recurse(sub, sub_col, eps)
    out.update((x, col[x]) for x in removed if x in col)
    if out[u] != c:
        out[w] = not c
    else:
        out[v] = not c
        out[w] = c
    return out


def _guarded(t, leaf_col, eps, root, body):
    col = body()
    ok = _unrooted_ok(t, col, leaf_col, eps) if root is None else _rooted_ok(t, col, leaf_col, root, eps)
    if ok:
        return col
    log.warning("reduction output failed postconditions on %r (eps=%d, root=%s); "
                "falling back to exhaustive search", t, eps, root)
    if len(t) > EXHAUSTIVE_BOUND:
        raise LemmaFailure(f"no valid split produced for {t!r}")
    col = _exhaust(t, leaf_col, eps, root)
    if col is None:
        raise LemmaFailure(f"exhaustive search found no valid split for {t!r}")
    return col


def _unrooted(t: CubicTree, leaf_col: dict[int, bool], eps: int) -> dict[int, bool]:
    def body():
        n = len(t)
        if n < 4:
            raise LemmaFailure(f"unrooted splitting needs at least 4 vertices, got {n}")
        if n == 4:
            return _exhaust(t, leaf_col, eps) or {}
        pair = _same_colour_cherry(t, leaf_col)
        if pair is not None:
            c = leaf_col[pair.u]
            sub = t.without((pair.u, pair.u2))
            sub_col = {v: cc for v, cc in leaf_col.items() if v in sub}
            sub_col[pair.apex] = not c
            out = _unrooted(sub, sub_col, eps)
            out[pair.u] = out[pair.u2] = c
            return out
        if n <= 8:
            return _exhaust(t, leaf_col, eps) or {}
        step, _ = next(_reductions(t, leaf_col))
        return _apply_reduction(t, leaf_col, eps, step, _unrooted)

    return _guarded(t, leaf_col, eps, None, body)


def _rooted(t: CubicTree, leaf_col: dict[int, bool], root: int, eps: int) -> dict[int, bool]:
    def body():
        n = len(t)
        if n <= 4:
            return _exhaust(t, leaf_col, eps, root) or {}
        pair = _same_colour_cherry(t, leaf_col)
        if pair is not None:
            c = leaf_col[pair.u]
            sub = t.without((pair.u, pair.u2))
            sub_col = {v: cc for v, cc in leaf_col.items() if v in sub}
            sub_col[pair.apex] = not c
            if root in (pair.u, pair.u2):
                # The root's only edge is cut; the rest needs the unrooted bound.
                out = _unrooted(sub, sub_col, eps)
            else:
                out = _rooted(sub, sub_col, root, eps)
            out[pair.u] = out[pair.u2] = c
            return out
        if n <= 8:
            return _exhaust(t, leaf_col, eps, root) or {}
        # At most one reduction touches the root, and from 10 vertices on the
        # contracted tree always offers a second one.
        for step, removed in _reductions(t, leaf_col):
            if root not in removed:
                return _apply_reduction(
                    t, leaf_col, eps, step, lambda s, c, e: _rooted(s, c, root, e))
        raise LemmaFailure(f"no reduction avoids root {root} in {t!r}")

    return _guarded(t, leaf_col, eps, root, body)


def split_cubic_tree_unrooted(t: CubicTree, leaf_split: Split, epsilon: int) -> Split:
    """Colour the internal vertices of ``t`` (at least 4 vertices) so that
    disc is in ``epsilon * {0,1,2}`` and at most one vertex has two or more
    same-side neighbours."""
    leaf_col = _validate(t, leaf_split, epsilon, None)
    if len(t) < 4:
        raise ValueError(f"unrooted splitting needs at least 4 vertices, got {len(t)}")
    col = _unrooted(t, leaf_col, epsilon)
    assert _unrooted_ok(t, col, leaf_col, epsilon)
    return Split.from_colouring(col)


def split_cubic_tree_rooted(t: CubicTree, leaf_split: Split, root: int, epsilon: int) -> Split:
    """Rooted variant: ``root`` is an X-side leaf, disc lands in
    ``epsilon * {-1,0,1,2,3}`` and the monochromatic subgraph is a matching
    when the root's edge is monochromatic."""
    leaf_col = _validate(t, leaf_split, epsilon, root)
    col = _rooted(t, leaf_col, root, epsilon)
    assert _rooted_ok(t, col, leaf_col, root, epsilon)
    return Split.from_colouring(col)
