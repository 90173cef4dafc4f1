"""Try the certificate-based solvers in turn, ending with the oracle."""

from __future__ import annotations

from dataclasses import dataclass

from .constructors import solve_tree_bipartite, solve_tree_cycle, split_from_3_edge_colouring
from .decomposition import (
    Budget,
    BudgetExhausted,
    find_3_edge_colouring,
    find_cubic_tree_bipartite_complement,
    find_tree_cycle_decomposition,
)
from .graph import CubicGraph, Split, verify_ban_linial
from .oracle import ORACLE_BOUND, OracleResult, brute_force_ban_linial

DEFAULT_ORDER = ("colouring", "tree-cycle", "tree-bipartite", "oracle")

# Outcome statuses.
SOLVED = "solved"
REFUTED = "refuted"
EXHAUSTED = "budget-exhausted"
UNDECIDED = "undecided"


@dataclass
class SolveOutcome:
    status: str
    path: str | None = None
    split: Split | None = None
    certificate: dict | None = None
    oracle: OracleResult | None = None
    exhausted: tuple[str, ...] = ()


def certificate_dict(kind: str, cert) -> dict:
    if kind == "colouring":
        return {"type": "3-edge-colouring",
                "colours": [[u, v, c] for (u, v), c in sorted(cert.colours.items())]}
    if kind == "tree-cycle":
        return {"type": "tree-cycle",
                "tree_edges": [list(e) for e in sorted(cert.tree_edges)],
                "cycle_edges": [list(e) for e in sorted(cert.cycle_edges)]}
    if kind == "tree-bipartite":
        return {"type": "cubic-tree", "tree_edges": [list(e) for e in cert.edges()]}
    raise ValueError(kind)


def auto_solve(
    g: CubicGraph,
    order=DEFAULT_ORDER,
    budget: int | None = None,
    max_n: int = ORACLE_BOUND,
    epsilon: int = 1,
) -> SolveOutcome:
    """First solver in ``order`` that yields a split; the split is verified
    before it is returned. Each search gets its own node budget."""
    exhausted = []
    for kind in order:
        try:
            if kind == "colouring":
                cert = find_3_edge_colouring(g, Budget(budget))
                s = None if cert is None else split_from_3_edge_colouring(g, cert)
            elif kind == "tree-cycle":
                cert = find_tree_cycle_decomposition(g, Budget(budget))
                s = None if cert is None else solve_tree_cycle(g, cert)
            elif kind == "tree-bipartite":
                cert = find_cubic_tree_bipartite_complement(g, Budget(budget))
                s = None if cert is None else solve_tree_bipartite(g, cert, epsilon)
            elif kind == "oracle":
                if g.n > max_n:
                    continue
                res = brute_force_ban_linial(g, max_n)
                if res.witness is None:
                    return SolveOutcome(REFUTED, kind, oracle=res, exhausted=tuple(exhausted))
                s = res.witness
                assert verify_ban_linial(g, s)
                return SolveOutcome(SOLVED, kind, s, {"type": "oracle", **res.to_dict()}, res,
                                    tuple(exhausted))
            else:
                raise ValueError(f"unknown solver {kind!r}")
        except BudgetExhausted:
            exhausted.append(kind)
            continue
        if s is not None:
            assert verify_ban_linial(g, s)
            return SolveOutcome(SOLVED, kind, s, certificate_dict(kind, cert),
                                exhausted=tuple(exhausted))
    return SolveOutcome(EXHAUSTED if exhausted else UNDECIDED, exhausted=tuple(exhausted))
