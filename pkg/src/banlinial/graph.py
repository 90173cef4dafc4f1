"""Graphs, splits and the predicates used to judge a split.

A split is a pair of disjoint vertex sets ``(X, Y)``. Following the usual
figure convention, X-side vertices are drawn solid black and Y-side vertices
open white, so the code sometimes says "black" for X.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import Protocol


class GraphError(ValueError):
    """Raised when a graph violates the invariants of its type."""


class SplitError(ValueError):
    """Raised when a split does not fit the graph it is applied to."""


class GraphLike(Protocol):
    def vertices(self) -> Iterable[int]: ...

    def neighbors(self, v: int) -> tuple[int, ...]: ...


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``. Isolated
    vertices are allowed, which is how subgraphs such as ``G - E(X,Y)`` keep
    the vertex set of their parent.
    """

    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        adj = tuple(tuple(sorted(nbrs)) for nbrs in self.adjacency)
        object.__setattr__(self, "adjacency", adj)
        n = len(adj)
        for v, nbrs in enumerate(adj):
            if len(set(nbrs)) != len(nbrs):
                raise GraphError(f"vertex {v} has a repeated neighbour")
            for u in nbrs:
                if not 0 <= u < n:
                    raise GraphError(f"vertex {v} has out-of-range neighbour {u}")
                if u == v:
                    raise GraphError(f"loop at vertex {v}")
                if v not in adj[u]:
                    raise GraphError(f"adjacency not symmetric on edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if v in nbrs[u]:
                raise GraphError(f"repeated edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(tuple(s) for s in nbrs))

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def without_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        drop = {_edge(u, v) for u, v in edges}
        for e in drop:
            if not self.has_edge(*e):
                raise GraphError(f"edge {e[0]}-{e[1]} is not in the graph")
        return Graph.from_edges(self.n, (e for e in self.edges() if e not in drop))

    def edge_subgraph(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        keep = {_edge(u, v) for u, v in edges}
        for e in keep:
            if not self.has_edge(*e):
                raise GraphError(f"edge {e[0]}-{e[1]} is not in the graph")
        return Graph.from_edges(self.n, sorted(keep))

    def components(self) -> list[list[int]]:
        return connected_components(self)

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1


class CubicGraph(Graph):
    """Simple 3-regular graph; ``n`` is even and at least 4."""

    def __post_init__(self):
        super().__post_init__()
        if self.n < 4 or self.n % 2:
            raise GraphError(f"a cubic graph needs an even number of vertices >= 4, got {self.n}")
        for v, nbrs in enumerate(self.adjacency):
            if len(nbrs) != 3:
                raise GraphError(f"vertex {v} has degree {len(nbrs)}, expected 3")

    @classmethod
    def from_graph(cls, g: Graph) -> "CubicGraph":
        return g if isinstance(g, CubicGraph) else cls(g.adjacency)


def connected_components(g: GraphLike) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen: set[int] = set()
    comps = []
    for s in sorted(g.vertices()):
        if s in seen:
            continue
        seen.add(s)
        stack, comp = [s], [s]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def two_colouring(g: GraphLike) -> dict[int, bool] | None:
    """Proper 2-colouring (``True`` = X side), or ``None`` if ``g`` has an odd cycle.

    Each component puts its smallest vertex on the X side.
    """
    colour: dict[int, bool] = {}
    for s in sorted(g.vertices()):
        if s in colour:
            continue
        colour[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in colour:
                    colour[u] = not colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return None
    return colour


@dataclass(frozen=True)
class Split:
    """Two disjoint vertex sets ``x`` and ``y``; possibly partial."""

    x: frozenset[int] = field(default_factory=frozenset)
    y: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "x", frozenset(self.x))
        object.__setattr__(self, "y", frozenset(self.y))
        both = self.x & self.y
        if both:
            raise SplitError(f"vertices on both sides: {sorted(both)}")

    @classmethod
    def from_colouring(cls, colour: Mapping[int, bool]) -> "Split":
        return cls(
            frozenset(v for v, c in colour.items() if c),
            frozenset(v for v, c in colour.items() if not c),
        )

    @classmethod
    def from_x(cls, vertices: Iterable[int], x: Iterable[int]) -> "Split":
        """Total split of ``vertices`` with the given X side."""
        xs = frozenset(x)
        vs = frozenset(vertices)
        if not xs <= vs:
            raise SplitError(f"X contains unknown vertices {sorted(xs - vs)}")
        return cls(xs, vs - xs)

    @property
    def domain(self) -> frozenset[int]:
        return self.x | self.y

    def in_x(self, v: int) -> bool:
        if v in self.x:
            return True
        if v in self.y:
            return False
        raise SplitError(f"vertex {v} is not assigned")

    def colouring(self) -> dict[int, bool]:
        out = {v: True for v in self.x}
        out.update((v, False) for v in self.y)
        return out

    def is_total(self, g: GraphLike) -> bool:
        return self.domain == frozenset(g.vertices())

    def swapped(self) -> "Split":
        return Split(self.y, self.x)

    def moved(self, v: int) -> "Split":
        """Move ``v`` to the other side."""
        if v in self.x:
            return Split(self.x - {v}, self.y | {v})
        if v in self.y:
            return Split(self.x | {v}, self.y - {v})
        raise SplitError(f"vertex {v} is not assigned")

    def restrict(self, vertices: Iterable[int]) -> "Split":
        vs = frozenset(vertices)
        return Split(self.x & vs, self.y & vs)

    def extends(self, other: "Split") -> bool:
        return other.x <= self.x and other.y <= self.y

    def __or__(self, other: "Split") -> "Split":
        return Split(self.x | other.x, self.y | other.y)

    def __str__(self) -> str:
        return f"{sorted(self.x)} | {sorted(self.y)}"


@dataclass(frozen=True)
class SplitReport:
    disc: int
    imbalance: int
    is_external: bool
    is_internal: bool
    offenders: tuple[int, ...]
    is_nearly_external: bool
    max_mono_component: int
    cut_size: int

    @property
    def is_bisection(self) -> bool:
        return self.imbalance == 0

    def is_k_split(self, k: int) -> bool:
        return self.max_mono_component <= k

    def to_dict(self) -> dict:
        return {
            "disc": self.disc,
            "imbalance": self.imbalance,
            "is_external": self.is_external,
            "is_internal": self.is_internal,
            "offenders": list(self.offenders),
            "is_nearly_external": self.is_nearly_external,
            "max_mono_component": self.max_mono_component,
            "cut_size": self.cut_size,
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "SplitReport":
        return cls(**{**d, "offenders": tuple(d["offenders"])})


def _require_total(g: GraphLike, s: Split) -> None:
    if not s.is_total(g):
        missing = sorted(set(g.vertices()) - s.domain)
        extra = sorted(s.domain - set(g.vertices()))
        raise SplitError(f"split is not total: unassigned {missing}, foreign {extra}")


def mono_degrees(g: GraphLike, s: Split) -> dict[int, int]:
    """Number of same-side neighbours of each vertex (its degree in G - E(X,Y))."""
    _require_total(g, s)
    return {v: sum(1 for u in g.neighbors(v) if (u in s.x) == (v in s.x)) for v in g.vertices()}


def discrepancy(g: GraphLike, s: Split) -> int:
    """e(G[X]) - e(G[Y]), counting only edges with both ends assigned."""
    d = 0
    for v in g.vertices():
        for u in g.neighbors(v):
            if u < v:
                continue
            if u in s.x and v in s.x:
                d += 1
            elif u in s.y and v in s.y:
                d -= 1
    return d


def _mono_components(g: GraphLike, s: Split) -> list[list[int]]:
    class _Mono:
        def vertices(self):
            return g.vertices()

        def neighbors(self, v):
            side = v in s.x
            return tuple(u for u in g.neighbors(v) if (u in s.x) == side)

    return connected_components(_Mono())


def evaluate_split(g: GraphLike, s: Split) -> SplitReport:
    """Evaluate a total split of ``g``.

    Uses the general degree conditions ``deg_H(v) <= deg_G(v)/2`` (external)
    and ``deg_H(v) >= deg_G(v)/2`` (internal) where ``H = G - E(X,Y)``, so it
    applies to trees and other non-cubic carriers as well.
    """
    _require_total(g, s)
    mono = mono_degrees(g, s)
    degree = {v: len(g.neighbors(v)) for v in g.vertices()}
    offenders = tuple(sorted(v for v in g.vertices() if degree[v] < 2 * mono[v]))
    internal = all(2 * mono[v] >= degree[v] for v in g.vertices())
    same_side = sum(mono.values()) // 2
    total = sum(degree.values()) // 2
    comps = _mono_components(g, s)
    report = SplitReport(
        disc=discrepancy(g, s),
        imbalance=len(s.x) - len(s.y),
        is_external=not offenders,
        is_internal=internal,
        offenders=offenders,
        is_nearly_external=len(offenders) <= 1,
        max_mono_component=max((len(c) for c in comps), default=0),
        cut_size=total - same_side,
    )
    if isinstance(g, CubicGraph):
        assert report.is_external == all(m <= 1 for m in mono.values())
    return report


def verify_ban_linial(g: CubicGraph, s: Split) -> bool:
    """True iff ``s`` is an external split with ``|X| - |Y|`` in ``[-2, 2]``."""
    rep = evaluate_split(g, s)
    return rep.is_external and abs(rep.imbalance) <= 2


def induced_mono_graph(g: Graph, s: Split) -> Graph:
    """The graph ``G - E(X,Y)``: same vertices, only monochromatic edges."""
    _require_total(g, s)
    return Graph.from_edges(g.n, ((u, v) for u, v in g.edges() if (u in s.x) == (v in s.x)))
