"""Exact copy counts of cycles, paths and walks.

Everything here returns Python ints.  Cycle enumeration anchors each cycle at
its smallest vertex and fixes its orientation by requiring the anchor's first
neighbour to be smaller than its last, so every copy is produced exactly once.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb, perm
from typing import Iterator, NamedTuple

from .graph import Graph, bfs_layers, iter_bits

KINDS = ("cycle", "path", "walk")


class Pattern(NamedTuple):
    kind: str
    k: int

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        kind, _, k = text.partition(":")
        if kind not in KINDS or not k.isdigit():
            raise ValueError(f"pattern must look like cycle:4, path:3 or walk:2, got {text!r}")
        return cls(kind, int(k))

    def __str__(self) -> str:
        return f"{self.kind}:{self.k}"


def cycle(k: int) -> Pattern:
    return Pattern("cycle", k)


def path(k: int) -> Pattern:
    return Pattern("path", k)


@dataclass(frozen=True)
class CountReport:
    pattern: Pattern
    count: int
    n: int
    m: int

    def to_dict(self) -> dict:
        return {"pattern": self.pattern.kind, "k": self.pattern.k,
                "count": str(self.count), "n": self.n, "m": self.m}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "CountReport":
        d = json.loads(text)
        return cls(Pattern(d["pattern"], d["k"]), int(d["count"]), d["n"], d["m"])


# Bit-row kernels.  ``rows`` is a tuple of int adjacency rows.

def _above(s: int, n: int) -> int:
    return ((1 << n) - 1) & ~((1 << (s + 1)) - 1)


def _extend_count(rows, cur: int, avail: int, remaining: int, close: int) -> int:
    if remaining == 1:
        return (rows[cur] & avail & close).bit_count()
    total = 0
    for w in iter_bits(rows[cur] & avail):
        total += _extend_count(rows, w, avail & ~(1 << w), remaining - 1, close)
    return total


def _cycles_from_anchor(rows, k: int, s: int) -> int:
    higher = _above(s, len(rows))
    rs = rows[s] & higher
    total = 0
    for v1 in iter_bits(rs):
        close = rs & ~((1 << (v1 + 1)) - 1)
        if close:
            total += _extend_count(rows, v1, higher & ~(1 << v1), k - 2, close)
    return total


def _paths_from_start(rows, k: int, s: int) -> int:
    # Paths with first vertex s and last vertex > s, so each copy once.
    full = (1 << len(rows)) - 1
    return _extend_count(rows, s, full & ~(1 << s), k - 1, _above(s, len(rows)))


def _shard(rows, k, kernel, anchors) -> int:
    return sum(kernel(rows, k, s) for s in anchors)


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("TURANLAB_THREADS", "1")))
    except ValueError:
        return 1


def _sharded_sum(g: Graph, k: int, kernel, workers: int | None) -> int:
    workers = default_workers() if workers is None else workers
    if workers <= 1 or g.n < 2 * workers:
        return _shard(g.rows, k, kernel, range(g.n))
    chunks = [range(i, g.n, workers) for i in range(workers)]
    with ProcessPoolExecutor(workers) as pool:
        parts = pool.map(_shard, [g.rows] * workers, [k] * workers, [kernel] * workers, chunks)
        return sum(parts)


def count_rows(rows, pattern: "Pattern") -> int:
    """Copy count straight from bit rows, skipping Graph construction."""
    n = len(rows)
    kind, k = pattern
    if kind == "cycle":
        return 0 if k > n else sum(_cycles_from_anchor(rows, k, s) for s in range(n))
    if kind == "path":
        if k == 1:
            return n
        return 0 if k > n else sum(_paths_from_start(rows, k, s) for s in range(n))
    return count_walks(Graph(n, tuple(rows)), k).count


def count_cycles(g: Graph, k: int, workers: int | None = None) -> CountReport:
    if k < 3:
        raise ValueError("cycle length must be at least 3")
    total = 0 if k > g.n else _sharded_sum(g, k, _cycles_from_anchor, workers)
    return CountReport(cycle(k), total, g.n, g.m)


def count_paths(g: Graph, k: int, workers: int | None = None) -> CountReport:
    """Unlabelled copies of the path on ``k`` vertices."""
    if k < 1:
        raise ValueError("path must have at least one vertex")
    if k == 1:
        total = g.n
    elif k > g.n:
        total = 0
    else:
        total = _sharded_sum(g, k, _paths_from_start, workers)
    return CountReport(path(k), total, g.n, g.m)


def walk_vector(g: Graph, k: int) -> list[int]:
    """Entry v = number of walks on ``k`` vertices starting at v."""
    vec = [1] * g.n
    for _ in range(k - 1):
        vec = [sum(vec[w] for w in iter_bits(row)) for row in g.rows]
    return vec


def count_walks(g: Graph, k: int) -> CountReport:
    if k < 1:
        raise ValueError("walk must have at least one vertex")
    return CountReport(Pattern("walk", k), sum(walk_vector(g, k)), g.n, g.m)


def count_pattern(g: Graph, pattern: Pattern) -> CountReport:
    if pattern.kind == "cycle":
        return count_cycles(g, pattern.k)
    if pattern.kind == "path":
        return count_paths(g, pattern.k)
    return count_walks(g, pattern.k)


def iter_cycles(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """Yield every k-cycle once, as (anchor, first neighbour, ..., last neighbour)."""
    if k < 3:
        raise ValueError("cycle length must be at least 3")
    if k > g.n:
        return
    rows = g.rows
    for s in range(g.n):
        higher = _above(s, g.n)
        rs = rows[s] & higher
        for v1 in iter_bits(rs):
            close = rs & ~((1 << (v1 + 1)) - 1)
            if not close:
                continue
            stack = [(v1, higher & ~(1 << v1), [s, v1])]
            while stack:
                cur, avail, seq = stack.pop()
                if len(seq) == k - 1:
                    for w in iter_bits(rows[cur] & avail & close):
                        yield (*seq, w)
                    continue
                for w in iter_bits(rows[cur] & avail):
                    stack.append((w, avail & ~(1 << w), seq + [w]))


def iter_paths_between(rows, a: int, b: int, edges: int, avoid: int = 0) -> Iterator[list[int]]:
    """Simple paths a..b with exactly ``edges`` edges, avoiding vertices in ``avoid``."""
    full = (1 << len(rows)) - 1
    avail0 = full & ~(1 << a) & ~avoid
    if edges == 1:
        if rows[a] >> b & 1:
            yield [a, b]
        return
    stack = [(a, avail0 & ~(1 << b), [a])]
    while stack:
        cur, avail, seq = stack.pop()
        if len(seq) == edges:
            if rows[cur] >> b & 1:
                yield seq + [b]
            continue
        for w in iter_bits(rows[cur] & avail):
            stack.append((w, avail & ~(1 << w), seq + [w]))


@dataclass(frozen=True)
class PairFunctionTable:
    """Number of simple l-edge paths between each unordered pair (zeros omitted)."""

    l: int
    values: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, pair: tuple[int, int]) -> int:
        a, b = pair
        return self.values.get((a, b) if a < b else (b, a), 0)

    def items(self):
        return self.values.items()


def pair_counts(g: Graph, l: int) -> PairFunctionTable:
    if l < 1:
        raise ValueError("paths need at least one edge")
    values: dict[tuple[int, int], int] = {}
    rows = g.rows
    full = (1 << g.n) - 1
    for a in range(g.n):
        stack = [(a, full & ~(1 << a), 0)]
        while stack:
            cur, avail, depth = stack.pop()
            if depth == l - 1:
                for b in iter_bits(rows[cur] & avail & _above(a, g.n)):
                    values[(a, b)] = values.get((a, b), 0) + 1
                continue
            for w in iter_bits(rows[cur] & avail):
                stack.append((w, avail & ~(1 << w), depth + 1))
    return PairFunctionTable(l, values)


def c4_identity_check(g: Graph) -> tuple[int, int]:
    """(sum over pairs of C(common neighbours, 2), number of 4-cycles)."""
    lhs = 0
    for a in range(g.n):
        for b in range(a + 1, g.n):
            lhs += comb((g.rows[a] & g.rows[b]).bit_count(), 2)
    # each 4-cycle has two diagonals a,b, so the pair sum counts it twice
    lhs, rem = divmod(lhs, 2)
    assert rem == 0
    return lhs, count_cycles(g, 4).count


def p3_from_vertex(g: Graph, a: int) -> int:
    """Sum of common-neighbour counts f(a, b) over b != a."""
    g.check_vertex(a)
    return sum((g.rows[a] & g.rows[b]).bit_count() for b in range(g.n) if b != a)


def p3_layer_identity(g: Graph, a: int) -> int:
    """2|E(N_1)| + |E(N_1, N_2)| for the layers around ``a``."""
    layers = bfs_layers(g, a)
    n1 = sum(1 << v for v in layers[1])
    n2 = sum(1 << v for v in layers[2])
    inside = sum((g.rows[u] & n1).bit_count() for u in layers[1]) // 2
    across = sum((g.rows[u] & n2).bit_count() for u in layers[1])
    return 2 * inside + across


def odd_cycles_through_vertex(g: Graph, v: int, l: int) -> tuple[int, int]:
    """(edges inside N_l(v), number of (2l+1)-cycles through v).

    The two agree when g has no cycle of length at most 2l.
    """
    g.check_vertex(v)
    layer = bfs_layers(g, v)[l]
    mask = sum(1 << u for u in layer)
    via_identity = sum((g.rows[u] & mask).bit_count() for u in layer) // 2
    k = 2 * l + 1
    if k > g.n:
        return via_identity, 0
    full = (1 << g.n) - 1
    directed = _extend_count(g.rows, v, full & ~(1 << v), k - 1, g.rows[v])
    assert directed % 2 == 0
    return via_identity, directed // 2


def falling_factorial(n: int, l: int) -> int:
    return perm(n, l) if 0 <= l <= n else 0


def closed_form_bipartite_cycles(a: int, b: int, l: int) -> int:
    """Number of 2l-cycles in K_{a,b}: (a)_l (b)_l / (2l)."""
    if l < 2:
        raise ValueError("half length must be at least 2")
    q, r = divmod(falling_factorial(a, l) * falling_factorial(b, l), 2 * l)
    assert r == 0
    return q
