"""Certificates consumed by the constructors, and backtracking searches for them.

Searches branch in lexicographic order, so the reported witness (or ``None``)
is reproducible. ``None`` means the search space was exhausted; running out
of the node budget raises :class:`BudgetExhausted` instead.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .graph import CubicGraph, Graph, connected_components, two_colouring
from .trees import CubicTree

Edge = tuple[int, int]


class BudgetExhausted(RuntimeError):
    """The search hit its node cap before reaching a verdict."""


class CertificateError(ValueError):
    """A certificate does not certify what it claims for the given graph."""


class Budget:
    def __init__(self, limit: int | None = None):
        self.limit = limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExhausted(f"search exceeded {self.limit} nodes")


def _budget(b: Budget | int | None) -> Budget:
    return b if isinstance(b, Budget) else Budget(b)


def _e(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# -- certificate types ------------------------------------------------------

@dataclass(frozen=True)
class TreeCycleDecomposition:
    tree_edges: frozenset[Edge]
    cycle_edges: frozenset[Edge]

    def __post_init__(self):
        object.__setattr__(self, "tree_edges", frozenset(_e(*e) for e in self.tree_edges))
        object.__setattr__(self, "cycle_edges", frozenset(_e(*e) for e in self.cycle_edges))

    def tree(self) -> CubicTree:
        return CubicTree.from_edges(sorted(self.tree_edges))

    def cycle_order(self) -> list[int]:
        """Cycle vertices in cyclic order, starting at the smallest and
        continuing toward its smaller cycle neighbour."""
        nbrs: dict[int, list[int]] = {}
        for u, v in self.cycle_edges:
            nbrs.setdefault(u, []).append(v)
            nbrs.setdefault(v, []).append(u)
        start = min(nbrs)
        order = [start, min(nbrs[start])]
        while len(order) < len(nbrs):
            a, b = nbrs[order[-1]]
            order.append(a if a != order[-2] else b)
        return order

    def validate(self, g: Graph) -> None:
        if self.tree_edges & self.cycle_edges:
            raise CertificateError("tree and cycle share edges")
        if self.tree_edges | self.cycle_edges != set(g.edges()):
            raise CertificateError("tree and cycle do not partition the edge set")
        try:
            t = self.tree()
        except ValueError as exc:
            raise CertificateError(f"tree part is not a cubic tree: {exc}") from None
        if len(t) != g.n:
            raise CertificateError("tree part is not spanning")
        deg: dict[int, int] = {}
        for u, v in self.cycle_edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        if any(d != 2 for d in deg.values()):
            raise CertificateError("cycle part is not 2-regular")
        if len(self.cycle_order()) != len(deg):
            raise CertificateError("cycle part is not a single cycle")
        # deg_T + deg_C = 3 forces the cycle through exactly the leaves.
        assert set(deg) == set(t.leaves())
        assert len(self.cycle_edges) == g.n // 2 + 1


@dataclass(frozen=True)
class EdgeColouring3:
    colours: Mapping[Edge, int]

    def matching(self, c: int) -> list[Edge]:
        return sorted(e for e, k in self.colours.items() if k == c)

    def validate(self, g: Graph) -> None:
        cols = {_e(*e): k for e, k in self.colours.items()}
        if set(cols) != set(g.edges()):
            raise CertificateError("colouring does not cover exactly the edges")
        if any(k not in (1, 2, 3) for k in cols.values()):
            raise CertificateError("colours must be 1, 2 or 3")
        for v in g.vertices():
            seen = [cols[_e(v, u)] for u in g.neighbors(v)]
            if len(set(seen)) != len(seen):
                raise CertificateError(f"improper colouring at vertex {v}")


@dataclass(frozen=True)
class NowhereZeroFlow:
    """Positive flow: ``arcs[e] = (tail, head)`` and ``values[e]`` in 1..k-1."""

    k: int
    arcs: Mapping[Edge, tuple[int, int]]
    values: Mapping[Edge, int]

    @classmethod
    def from_signed(cls, k: int, phi: Mapping[tuple[int, int], int]) -> "NowhereZeroFlow":
        """Build from signed values on arcs ``(tail, head)``; negative arcs are
        reversed and their value negated."""
        arcs, values = {}, {}
        for (a, b), x in phi.items():
            if x < 0:
                a, b, x = b, a, -x
            arcs[_e(a, b)] = (a, b)
            values[_e(a, b)] = x
        return cls(k, arcs, values)

    def validate(self, g: Graph) -> None:
        if set(self.arcs) != set(g.edges()) or set(self.values) != set(g.edges()):
            raise CertificateError("flow does not cover exactly the edges")
        for e, (a, b) in self.arcs.items():
            if _e(a, b) != e:
                raise CertificateError(f"arc {a}->{b} filed under edge {e}")
        for e, x in self.values.items():
            if not 1 <= x <= self.k - 1:
                raise CertificateError(f"flow value {x} on {e} outside 1..{self.k - 1}")
        net = [0] * g.n
        for e, (a, b) in self.arcs.items():
            net[a] -= self.values[e]
            net[b] += self.values[e]
        bad = [v for v in g.vertices() if net[v]]
        if bad:
            raise CertificateError(f"conservation fails at {bad}")

    def out_degree(self, v: int) -> int:
        return sum(1 for a, _ in self.arcs.values() if a == v)

    def to_dict(self) -> dict:
        return {"k": self.k,
                "arcs": [[*self.arcs[e], self.values[e]] for e in sorted(self.arcs)]}


# -- searches ---------------------------------------------------------------

def _cycles_of_length(g: Graph, length: int, budget: Budget) -> Iterable[list[int]]:
    """Simple cycles with ``length`` vertices, each reported once, starting at
    its smallest vertex and with second vertex smaller than last."""
    for s in g.vertices():
        path = [s]
        on_path = {s}

        def extend():
            budget.tick()
            v = path[-1]
            if len(path) == length:
                if g.has_edge(v, s) and path[1] < path[-1]:
                    yield list(path)
                return
            for u in g.neighbors(v):
                if u > s and u not in on_path:
                    path.append(u)
                    on_path.add(u)
                    yield from extend()
                    path.pop()
                    on_path.discard(u)

        yield from extend()


def find_tree_cycle_decomposition(g: CubicGraph, budget: Budget | int | None = None
                                  ) -> TreeCycleDecomposition | None:
    """Edge partition into a spanning cubic tree and a cycle, or ``None``.

    The cycle must have ``n/2 + 1`` vertices, so only cycles of that length
    are tried; the complement is then a tree exactly when it is connected.
    """
    budget = _budget(budget)
    length = g.n // 2 + 1
    for cyc in _cycles_of_length(g, length, budget):
        cycle_edges = {_e(cyc[i], cyc[(i + 1) % length]) for i in range(length)}
        rest = [e for e in g.edges() if e not in cycle_edges]
        if len(connected_components(Graph.from_edges(g.n, rest))) == 1:
            d = TreeCycleDecomposition(frozenset(rest), frozenset(cycle_edges))
            d.validate(g)
            return d
    return None


def _tree_from_internal(g: Graph, internal: Iterable[int]) -> CubicTree:
    inner = set(internal)
    return CubicTree.from_edges(sorted({_e(v, u) for v in inner for u in g.neighbors(v)}))


def complement_is_bipartite(g: Graph, t: CubicTree) -> bool:
    return two_colouring(g.without_edges(t.edges())) is not None


def find_cubic_tree_bipartite_complement(g: CubicGraph, budget: Budget | int | None = None
                                         ) -> CubicTree | None:
    """Smallest (then lexicographically first) cubic subtree ``T`` with
    ``G - E(T)`` bipartite, or ``None``.

    A cubic subtree with at least 4 vertices is determined by its internal
    vertex set ``I``: its edges are all edges at ``I``. That is a tree with
    leaf degree 1 iff ``G[I]`` is a tree and no outside vertex sees two
    vertices of ``I``. Both conditions survive deleting a leaf of ``G[I]``,
    so growing valid sets one vertex at a time reaches all of them.
    """
    budget = _budget(budget)
    if two_colouring(g) is not None:
        u, v = g.edges()[0]
        return CubicTree.from_edges([(u, v)])
    level = [(v,) for v in g.vertices()]
    while level:
        nxt = set()
        for inner in level:
            budget.tick()
            t = _tree_from_internal(g, inner)
            if complement_is_bipartite(g, t):
                return t
            in_set = set(inner)
            for w in sorted({u for v in inner for u in g.neighbors(v)} - in_set):
                # w is a leaf of T; it may become internal only if none of its
                # other neighbours already touches I.
                if all(x in in_set or not any(y in in_set for y in g.neighbors(x))
                       for x in g.neighbors(w) if x not in in_set):
                    if sum(1 for x in g.neighbors(w) if x in in_set) == 1:
                        nxt.add(tuple(sorted(in_set | {w})))
        level = sorted(nxt)
    return None


def find_3_edge_colouring(g: CubicGraph, budget: Budget | int | None = None
                          ) -> EdgeColouring3 | None:
    """Proper 3-edge-colouring by backtracking, or ``None``.

    The three edges at vertex 0 get colours 1, 2, 3 (every colouring can be
    relabelled that way); remaining edges follow BFS order from 0.
    """
    budget = _budget(budget)
    order = []
    seen = {0}
    queue = deque([0])
    placed = set()
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            e = _e(v, u)
            if e not in placed:
                placed.add(e)
                order.append(e)
            if u not in seen:
                seen.add(u)
                queue.append(u)
    order += [e for e in g.edges() if e not in placed]
    used: list[set[int]] = [set() for _ in g.vertices()]
    colour: dict[Edge, int] = {}

    def assign(i: int) -> bool:
        budget.tick()
        if i == len(order):
            return True
        a, b = order[i]
        choices = [i + 1] if i < 3 else (1, 2, 3)
        for c in choices:
            if c in used[a] or c in used[b]:
                continue
            colour[(a, b)] = c
            used[a].add(c)
            used[b].add(c)
            if assign(i + 1):
                return True
            used[a].discard(c)
            used[b].discard(c)
            del colour[(a, b)]
        return False

    if not assign(0):
        return None
    ec = EdgeColouring3(dict(colour))
    ec.validate(g)
    return ec


def find_nowhere_zero_flow(g: CubicGraph, k: int, budget: Budget | int | None = None
                           ) -> NowhereZeroFlow | None:
    """Nowhere-zero integer ``k``-flow, or ``None``.

    Flows are parametrised by their values on the edges outside a BFS
    spanning tree; each tree edge carries a signed sum of the values on the
    fundamental cycles through it. Values are tried in the order
    ``1..k-1, -1..-(k-1)`` and a tree edge is checked as soon as its last
    contributing cycle is fixed.
    """
    if not 2 <= k <= 6:
        raise ValueError(f"flow order must be between 2 and 6, got {k}")
    budget = _budget(budget)
    parent = {0: None}
    depth = {0: 0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if u not in parent:
                parent[u] = v
                depth[u] = depth[v] + 1
                queue.append(u)
    tree = {_e(v, p) for v, p in parent.items() if p is not None}
    cotree = [e for e in g.edges() if e not in tree]

    def path_to_root(v):
        out = []
        while parent[v] is not None:
            out.append((v, parent[v]))
            v = parent[v]
        return out

    # coef[t][c] = +-1: contribution of cotree value c to tree edge t, both
    # read along the arc from smaller to larger endpoint.
    coef: dict[Edge, dict[int, int]] = {e: {} for e in tree}
    for c, (a, b) in enumerate(cotree):
        # cycle a -> b, then b up to the meeting point and down to a
        up_b = path_to_root(b)
        up_a = path_to_root(a)
        common = set(up_b) & set(up_a)
        for x, y in up_b:
            if (x, y) not in common:
                coef[_e(x, y)][c] = 1 if x < y else -1
        for x, y in up_a:
            if (x, y) not in common:
                coef[_e(x, y)][c] = -1 if x < y else 1
    if any(not cs for cs in coef.values()):
        return None  # a bridge carries zero flow
    finishing: dict[int, list[Edge]] = {}
    for t, cs in coef.items():
        finishing.setdefault(max(cs), []).append(t)
    values = list(range(1, k)) + list(range(-1, -k, -1))
    x = [0] * len(cotree)

    def assign(i: int) -> bool:
        budget.tick()
        if i == len(cotree):
            return True
        for val in values:
            x[i] = val
            ok = True
            for t in finishing.get(i, ()):
                f = sum(s * x[c] for c, s in coef[t].items())
                if f == 0 or abs(f) >= k:
                    ok = False
                    break
            if ok and assign(i + 1):
                return True
        x[i] = 0
        return False

    if not assign(0):
        return None
    phi = {e: x[c] for c, e in enumerate(cotree)}
    for t, cs in coef.items():
        phi[t] = sum(s * x[c] for c, s in cs.items())
    flow = NowhereZeroFlow.from_signed(k, phi)
    flow.validate(g)
    return flow
