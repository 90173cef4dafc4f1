"""Named cubic graphs and a seeded random cubic graph generator."""

from __future__ import annotations

import random

from .graph import CubicGraph


def k4() -> CubicGraph:
    return CubicGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def k33() -> CubicGraph:
    """K_{3,3} with sides {0,1,2} and {3,4,5}."""
    return CubicGraph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])


def prism(m: int) -> CubicGraph:
    """C_m x K_2: outer cycle 0..m-1, inner cycle m..2m-1, rungs i -- i+m."""
    if m < 3:
        raise ValueError(f"prism needs m >= 3, got {m}")
    edges = []
    for i in range(m):
        j = (i + 1) % m
        edges += [(i, j), (m + i, m + j), (i, m + i)]
    return CubicGraph.from_edges(2 * m, edges)


def generalized_petersen(m: int, k: int) -> CubicGraph:
    edges = []
    for i in range(m):
        edges += [(i, (i + 1) % m), (i, m + i), (m + i, m + (i + k) % m)]
    return CubicGraph.from_edges(2 * m, edges)


def petersen() -> CubicGraph:
    """Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9."""
    return generalized_petersen(5, 2)


def moebius_kantor() -> CubicGraph:
    return generalized_petersen(8, 3)


def random_cubic(n: int, seed: int | None = None, max_tries: int = 10_000) -> CubicGraph:
    """Uniform-ish random cubic graph from the pairing model.

    Pairings producing loops or repeated edges are rejected and redrawn.
    """
    if n < 4 or n % 2:
        raise ValueError(f"random_cubic needs an even n >= 4, got {n}")
    rng = random.Random(seed)
    points = [v for v in range(n) for _ in range(3)]
    for _ in range(max_tries):
        rng.shuffle(points)
        edges = set()
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            e = (min(u, v), max(u, v))
            if u == v or e in edges:
                break
            edges.add(e)
        else:
            return CubicGraph.from_edges(n, sorted(edges))
    raise RuntimeError(f"no simple pairing found in {max_tries} tries")


NAMED = {
    "k4": k4,
    "k33": k33,
    "petersen": petersen,
    "moebius_kantor": moebius_kantor,
}


def named(text: str, seed: int | None = None) -> CubicGraph:
    """Resolve ``k4``, ``k33``, ``petersen``, ``moebius_kantor``, ``prism:M``
    or ``random:N``."""
    name, _, arg = text.partition(":")
    name = name.lower().replace("-", "_")
    if name in NAMED and not arg:
        return NAMED[name]()
    if name == "prism" and arg:
        return prism(int(arg))
    if name == "random" and arg:
        return random_cubic(int(arg), seed)
    raise ValueError(f"unknown graph {text!r}")
