from pathlib import Path

import networkx as nx
import pytest

from banlinial.formats import read_graph6_stream
from banlinial.graph import CubicGraph

DATA = Path(__file__).parent / "data"
# Connected cubic graphs per order (OEIS A002851).
KNOWN_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}


def load_corpus(n: int) -> list[CubicGraph]:
    with open(DATA / f"cubic_connected_{n}.g6") as fh:
        return [CubicGraph.from_graph(g) for g in read_graph6_stream(fh)]


def corpus_upto(max_n: int) -> list[CubicGraph]:
    return [g for n in range(4, max_n + 1, 2) for g in load_corpus(n)]


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges())
    return h


@pytest.fixture(scope="session")
def corpus12():
    return corpus_upto(12)


@pytest.fixture(scope="session")
def corpus14():
    return corpus_upto(14)


ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
