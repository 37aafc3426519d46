"""Edge-list, graph6 and hypergraph text formats.

Edge list: first line ``n m``, then ``m`` lines ``u v`` (0-based), LF newlines.
graph6 follows the nauty definition; the ``>>graph6<<`` header is accepted but
sparse6 (``:``) and digraph6 (``&``) inputs are rejected.
"""

from __future__ import annotations

import io as _io
from pathlib import Path
from typing import IO, Union

from .graph import Graph, GraphError, build_graph

GRAPH6_HEADER = b">>graph6<<"

Source = Union[str, Path, bytes, IO]


class ParseError(GraphError):
    def __init__(self, message: str, *, line: int | None = None, byte: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if byte is not None:
            where.append(f"byte {byte}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.byte = byte


def _read_bytes(source: Source) -> bytes:
    if isinstance(source, bytes):
        return source
    if isinstance(source, (str, Path)):
        return Path(source).read_bytes()
    data = source.read()
    return data.encode() if isinstance(data, str) else data


def parse_edge_list(text: str) -> Graph:
    lines = text.split("\n")
    if not lines or not lines[0].strip():
        raise ParseError("missing 'n m' header", line=1)
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError("header must be 'n m'", line=1)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError("header must hold two integers", line=1) from None
    if n < 0 or m < 0:
        raise ParseError("negative header value", line=1)
    edges = []
    for i in range(m):
        lineno = i + 2
        if lineno > len(lines):
            raise ParseError(f"expected {m} edges, file ended", line=lineno)
        parts = lines[lineno - 1].split()
        if len(parts) != 2:
            raise ParseError("edge line must be 'u v'", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("non-integer vertex index", line=lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index >= n={n}", line=lineno)
        if u == v:
            raise ParseError("loop edge", line=lineno)
        edges.append((u, v))
    if any(line.strip() for line in lines[m + 1:]):
        raise ParseError("trailing content after edge lines", line=m + 2)
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> bytes:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return ("\n".join(out) + "\n").encode("ascii")


def _graph6_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 68719476736:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise GraphError("graph too large for graph6")


def format_graph6(g: Graph, header: bool = False) -> bytes:
    bits = [g.rows[j] >> i & 1 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + sum(b << (5 - k) for k, b in enumerate(bits[i:i + 6]))
        for i in range(0, len(bits), 6)
    )
    return (GRAPH6_HEADER if header else b"") + _graph6_size(g.n) + body + b"\n"


def parse_graph6(data: bytes) -> Graph:
    pos = 0
    if data.startswith(GRAPH6_HEADER):
        pos = len(GRAPH6_HEADER)
    data = data.rstrip(b"\r\n")
    if pos < len(data) and data[pos:pos + 1] in (b":", b"&"):
        kind = "sparse6" if data[pos:pos + 1] == b":" else "digraph6"
        raise ParseError(f"{kind} input is not supported", byte=pos)
    if b"\n" in data[pos:]:
        raise ParseError("multiple graphs in graph6 input", byte=data.index(b"\n", pos))
    for i in range(pos, len(data)):
        if not 63 <= data[i] <= 126:
            raise ParseError(f"byte {data[i]!r} outside graph6 range", byte=i)
    if pos >= len(data):
        raise ParseError("empty graph6 input", byte=pos)
    if data[pos] != 126:
        n, pos = data[pos] - 63, pos + 1
    elif pos + 1 < len(data) and data[pos + 1] == 126:
        if pos + 8 > len(data):
            raise ParseError("truncated size field", byte=pos)
        n = 0
        for c in data[pos + 2:pos + 8]:
            n = (n << 6) | (c - 63)
        pos += 8
    else:
        if pos + 4 > len(data):
            raise ParseError("truncated size field", byte=pos)
        n = 0
        for c in data[pos + 1:pos + 4]:
            n = (n << 6) | (c - 63)
        pos += 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos != need:
        raise ParseError(f"expected {need} adjacency bytes, got {len(data) - pos}", byte=pos)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            c = data[pos + k // 6] - 63
            if c >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def read_graph(source: Source, format: str = "edge-list") -> Graph:
    data = _read_bytes(source)
    if format == "edge-list":
        try:
            text = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError("edge list must be ASCII", byte=exc.start) from None
        return parse_edge_list(text)
    if format == "graph6":
        return parse_graph6(data)
    raise ValueError(f"unknown graph format {format!r}")


def write_graph(g: Graph, format: str = "edge-list") -> bytes:
    if format == "edge-list":
        return format_edge_list(g)
    if format == "graph6":
        return format_graph6(g)
    raise ValueError(f"unknown graph format {format!r}")


def read_hypergraph(source: Source):
    from .berge import Hypergraph

    text = _read_bytes(source).decode("ascii")
    lines = text.split("\n")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError("header must be 'n m'", line=1)
    n, m = int(header[0]), int(header[1])
    edges = []
    for i in range(m):
        if i + 1 >= len(lines):
            raise ParseError(f"expected {m} hyperedges, file ended", line=i + 2)
        try:
            members = [int(x) for x in lines[i + 1].split()]
        except ValueError:
            raise ParseError("non-integer vertex index", line=i + 2) from None
        if any(not 0 <= x < n for x in members):
            raise ParseError(f"vertex index >= n={n}", line=i + 2)
        edges.append(members)
    try:
        return Hypergraph.build(n, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def write_hypergraph(h) -> bytes:
    buf = _io.StringIO()
    buf.write(f"{h.order} {len(h.edges)}\n")
    for e in h.edges:
        buf.write(" ".join(map(str, e)) + "\n")
    return buf.getvalue().encode("ascii")
