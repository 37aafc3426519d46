"""Immutable simple graphs stored as per-vertex bit rows.

Vertex ``v`` is adjacent to ``u`` iff bit ``u`` of ``rows[v]`` is set.  All
other modules consume :class:`Graph`; nothing mutates one after it is built.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np


class GraphError(ValueError):
    """Invalid vertex index, loop edge, or malformed adjacency."""


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.rows)}")

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build from bit rows, checking symmetry and irreflexivity."""
        n = len(rows)
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= {n}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                r ^= low
        return cls(n, tuple(rows))

    @cached_property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def adjacency_matrix(self, dtype=np.float64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def subgraph_edges(self, keep: Iterable[tuple[int, int]]) -> "Graph":
        """Spanning subgraph on the same vertex set with only ``keep``."""
        return build_graph(self.n, keep)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return build_graph(offset, edges)


def with_isolated(g: Graph, extra: int) -> Graph:
    return Graph(g.n + extra, g.rows + (0,) * extra)


@dataclass(frozen=True)
class BfsLayers:
    source: int
    layers: tuple[frozenset[int], ...]
    unreachable: frozenset[int]

    def layer_of(self) -> dict[int, int]:
        return {v: i for i, layer in enumerate(self.layers) for v in layer}

    def __len__(self) -> int:
        return len(self.layers)

    def __getitem__(self, i: int) -> frozenset[int]:
        return self.layers[i] if i < len(self.layers) else frozenset()


def bfs_layers(g: Graph, v: int) -> BfsLayers:
    """Distance layers ``N_0(v), N_1(v), ...`` from ``v``."""
    g.check_vertex(v)
    seen = 1 << v
    frontier = 1 << v
    layers = []
    while frontier:
        layers.append(frozenset(iter_bits(frontier)))
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= g.rows[u]
        frontier = nxt & ~seen
        seen |= frontier
    unreachable = frozenset(u for u in range(g.n) if not seen >> u & 1)
    return BfsLayers(v, tuple(layers), unreachable)


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-colouring of every component, or ``None`` if an odd cycle exists."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.rows[u]):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    side0 = frozenset(v for v in range(g.n) if color[v] == 0)
    side1 = frozenset(v for v in range(g.n) if color[v] == 1)
    return side0, side1


# Named graphs. Layouts are documented because golden files depend on them.

def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices ``0-1-...-(n-1)``."""
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """Centre 0, leaves ``1..leaves``."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, spokes i--i+5, inner pentagram on 5..9."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) drawn from a Philox stream keyed by ``seed``."""
    rng = np.random.Generator(np.random.Philox(seed))
    pairs = list(combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return build_graph(n, [e for e, k in zip(pairs, keep) if k])


def random_bipartite_graph(a: int, b: int, p: float, seed: int) -> Graph:
    """Random subgraph of K_{a,b}; parts ``0..a-1`` and ``a..a+b-1``."""
    rng = np.random.Generator(np.random.Philox(seed))
    pairs = [(u, a + v) for u in range(a) for v in range(b)]
    keep = rng.random(len(pairs)) < p
    return build_graph(a + b, [e for e, k in zip(pairs, keep) if k])
