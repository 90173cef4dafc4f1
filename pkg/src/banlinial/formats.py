"""graph6, edge lists and DOT."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .graph import Graph, GraphError, Split

GRAPH6_HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    """Malformed textual graph. ``lineno`` is set when the input has lines."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(message if lineno is None else f"line {lineno}: {message}")


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 size header")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise GraphFormatError("truncated graph6 size header")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def parse_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    try:
        data = text.encode("ascii")
    except UnicodeEncodeError:
        raise GraphFormatError("graph6 must be printable ASCII") from None
    if any(not 63 <= b <= 126 for b in data):
        raise GraphFormatError("graph6 byte outside the range 63..126")
    n, pos = _decode_n(data)
    n_bits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (n_bits + 5) // 6:
        raise GraphFormatError(
            f"graph6 body has {len(body)} bytes, expected {(n_bits + 5) // 6} for n={n}")
    bits = []
    for b in body:
        v = b - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[n_bits:]):
        raise GraphFormatError("nonzero padding bits in graph6")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def emit_graph6(g: Graph) -> str:
    n = g.n
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + sum(bit << (5 - s) for s, bit in enumerate(bits[k:k + 6]))
        for k in range(0, len(bits), 6)
    )
    return (_encode_n(n) + body).decode("ascii")


def read_graph6_stream(lines: Iterable[str]) -> Iterator[Graph]:
    """Graphs from a graph6 stream, skipping blank lines."""
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield parse_graph6(line)
        except (GraphFormatError, GraphError) as exc:
            raise GraphFormatError(str(exc), lineno) from None


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Whitespace-separated ``u v`` pairs, one per line; ``#`` starts a comment.

    The vertex count is one more than the largest id unless ``n`` is given.
    """
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {raw.strip()!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {raw.strip()!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphFormatError("negative vertex id", lineno)
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", lineno)
        e = (min(u, v), max(u, v))
        if e in edges:
            raise GraphFormatError(f"repeated edge {u}-{v}", lineno)
        edges.append(e)
    size = n if n is not None else max((v for e in edges for v in e), default=-1) + 1
    if n is None and size > 2 * len(edges):
        # Ids beyond 2|E| can only name isolated vertices.
        raise GraphFormatError(f"vertex id {size - 1} too large for {len(edges)} edges")
    try:
        return Graph.from_edges(size, edges)
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None


def emit_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def emit_dot(g: Graph, s: Split | None = None, name: str = "G") -> str:
    """Undirected DOT. X-side vertices are filled black, Y-side vertices are
    open white, and cut edges are dashed."""
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in g.vertices():
        if s is None:
            lines.append(f"  {v};")
        elif s.in_x(v):
            lines.append(f'  {v} [style=filled, fillcolor=black, fontcolor=white];')
        else:
            lines.append(f'  {v} [style=solid, fillcolor=white, fontcolor=black];')
    for u, v in g.edges():
        if s is not None and s.in_x(u) != s.in_x(v):
            lines.append(f"  {u} -- {v} [style=dashed, color=gray40];")
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
