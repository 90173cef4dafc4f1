"""Exhaustive ground truth for small graphs and trees."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .graph import CubicGraph, Split, SplitReport, evaluate_split
from .trees import (
    CubicTree,
    check_rooted,
    check_unrooted,
    exhaustive_tree_split,
    split_cubic_tree_rooted,
    split_cubic_tree_unrooted,
)

ORACLE_BOUND = 24
_CHUNK = 1 << 18


@dataclass
class OracleResult:
    """Outcome of enumerating every split of a cubic graph.

    ``external_counts`` maps imbalance ``|X| - |Y|`` to the number of external
    splits with that imbalance, counting ``(X, Y)`` and ``(Y, X)`` separately.
    ``satisfying`` holds the X sides (as bitmasks, vertex 0 on X) of every
    split meeting the conjecture.
    """

    n: int
    enumerated: int
    external_counts: dict[int, int]
    satisfying: frozenset[int]
    witness: Split | None
    report: SplitReport | None

    @property
    def holds(self) -> bool:
        return self.witness is not None

    @property
    def external_bisection_exists(self) -> bool:
        return self.external_counts.get(0, 0) > 0

    def contains(self, s: Split) -> bool:
        """Whether ``s`` (either orientation) is among the satisfying splits."""
        x = s.x if 0 in s.x else s.y
        return sum(1 << v for v in x) in self.satisfying

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "enumerated": self.enumerated,
            "external_counts": {str(k): v for k, v in sorted(self.external_counts.items())},
            "satisfying": len(self.satisfying),
            "holds": self.holds,
            "external_bisection_exists": self.external_bisection_exists,
        }


def _external_masks(g: CubicGraph, max_n: int):
    """Yield (masks, external, imbalance) chunks over all splits with vertex 0
    on X. Bit v set means v is on the Y side."""
    n = g.n
    if n > max_n:
        raise ValueError(f"oracle bound is {max_n} vertices, graph has {n}")
    nbrs = np.array([g.neighbors(v) for v in g.vertices()], dtype=np.int64)
    total = 1 << (n - 1)
    for start in range(0, total, _CHUNK):
        masks = np.arange(start, min(total, start + _CHUNK), dtype=np.int64) << 1
        bits = (masks[:, None] >> np.arange(n)) & 1
        same = np.zeros_like(bits)
        for j in range(nbrs.shape[1]):
            same += bits == bits[:, nbrs[:, j]]
        external = (same <= 1).all(axis=1)
        imbalance = n - 2 * bits.sum(axis=1)
        yield masks, external, imbalance


def brute_force_ban_linial(g: CubicGraph, max_n: int = ORACLE_BOUND) -> OracleResult:
    """Enumerate all ``2^(n-1)`` splits with vertex 0 fixed on X.

    The witness is the satisfying split of smallest ``|imbalance|``, ties
    broken by the smallest Y-mask.
    """
    full = (1 << g.n) - 1
    counts: Counter[int] = Counter()
    satisfying: set[int] = set()
    best = None
    enumerated = 0
    for masks, external, imbalance in _external_masks(g, max_n):
        enumerated += len(masks)
        for d, c in zip(*np.unique(imbalance[external], return_counts=True)):
            counts[int(d)] += int(c)
            counts[-int(d)] += int(c)
        good = external & (np.abs(imbalance) <= 2)
        for m, d in zip(masks[good].tolist(), imbalance[good].tolist()):
            satisfying.add(full ^ m)
            if best is None or abs(d) < best[0]:
                best = (abs(d), m)
    assert enumerated == 1 << (g.n - 1)
    witness = report = None
    if best is not None:
        ymask = best[1]
        witness = Split.from_x(g.vertices(), (v for v in g.vertices() if not ymask >> v & 1))
        report = evaluate_split(g, witness)
    return OracleResult(g.n, enumerated, dict(sorted(counts.items())), frozenset(satisfying),
                        witness, report)


def external_splits(g: CubicGraph, max_n: int = ORACLE_BOUND) -> list[Split]:
    """Every external split with vertex 0 on X."""
    out = []
    for masks, external, _ in _external_masks(g, max_n):
        for m in masks[external].tolist():
            out.append(Split.from_x(g.vertices(), (v for v in g.vertices() if not m >> v & 1)))
    return out


def external_bisection_exists(g: CubicGraph, max_n: int = ORACLE_BOUND) -> bool:
    for _, external, imbalance in _external_masks(g, max_n):
        if (external & (imbalance == 0)).any():
            return True
    return False


# -- cubic trees -------------------------------------------------------------

def _canonical_code(t: CubicTree) -> str:
    """AHU code of the tree rooted at its centre (or the smaller code over
    both centres)."""
    layer = t.leaves()
    remaining = len(t)
    degree = {v: t.degree(v) for v in t.vertices()}
    removed = set()
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            removed.add(v)
            for u in t.neighbors(v):
                if u not in removed:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    centres = [v for v in t.vertices() if v not in removed]

    def code(v, parent):
        return "(" + "".join(sorted(code(u, v) for u in t.neighbors(v) if u != parent)) + ")"

    if len(centres) == 1:
        return code(centres[0], None)
    a, b = centres
    return min(code(a, b) + code(b, a), code(b, a) + code(a, b))


def cubic_trees(max_n: int) -> dict[int, list[CubicTree]]:
    """All cubic trees with up to ``max_n`` vertices, one per isomorphism
    class, grown from a single edge by turning a leaf into a cherry apex."""
    current = {_canonical_code(CubicTree.from_edges([(0, 1)])): CubicTree.from_edges([(0, 1)])}
    out = {2: list(current.values())}
    n = 2
    while n + 2 <= max_n:
        nxt = {}
        for t in current.values():
            for leaf in t.leaves():
                edges = t.edges() + [(leaf, n), (leaf, n + 1)]
                grown = CubicTree.from_edges(edges)
                nxt.setdefault(_canonical_code(grown), grown)
        n += 2
        current = dict(sorted(nxt.items()))
        out[n] = list(current.values())
    return out


@dataclass
class SweepReport:
    max_n: int
    rooted_max_n: int
    trees: dict[int, int] = field(default_factory=dict)
    unrooted_cases: int = 0
    rooted_cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "rooted_max_n": self.rooted_max_n,
            "trees": {str(k): v for k, v in self.trees.items()},
            "unrooted_cases": self.unrooted_cases,
            "rooted_cases": self.rooted_cases,
            "failures": self.failures,
        }


def lemma_sweep(max_n: int = 12, rooted_max_n: int | None = None) -> SweepReport:
    """Run both tree splitters on every cubic tree, leaf split, sign and (for
    the rooted splitter) X-side root, checking each output and confirming the
    exhaustive search also finds a witness."""
    if max_n > 14:
        raise ValueError("lemma sweep is limited to trees with at most 14 vertices")
    rooted_max_n = max_n if rooted_max_n is None else rooted_max_n
    rep = SweepReport(max_n, rooted_max_n)
    for n, trees in cubic_trees(max(max_n, rooted_max_n)).items():
        rep.trees[n] = len(trees)
        for t, eps in itertools.product(trees, (1, -1)):
            leaves = t.leaves()
            for bits in itertools.product((True, False), repeat=len(leaves)):
                ls = Split.from_colouring(dict(zip(leaves, bits)))
                if 4 <= n <= max_n:
                    rep.unrooted_cases += 1
                    _sweep_case(rep, t, ls, eps, None)
                if n <= rooted_max_n:
                    for r in sorted(ls.x):
                        rep.rooted_cases += 1
                        _sweep_case(rep, t, ls, eps, r)
    return rep


def _sweep_case(rep: SweepReport, t, ls, eps, root) -> None:
    label = f"tree={t.edges()} leaves={ls} eps={eps} root={root}"
    try:
        if root is None:
            s = split_cubic_tree_unrooted(t, ls, eps)
            ok = check_unrooted(t, s, ls, eps)
        else:
            s = split_cubic_tree_rooted(t, ls, root, eps)
            ok = check_rooted(t, s, ls, root, eps)
    except AssertionError as exc:
        rep.failures.append(f"{label}: {exc}")
        return
    if not ok:
        rep.failures.append(f"{label}: output {s} fails postconditions")
    if exhaustive_tree_split(t, ls, eps, rooted_at=root) is None:
        rep.failures.append(f"{label}: exhaustive search found nothing")
