"""Hypergraphs, Berge cycles and certified high-girth generators.

A Berge cycle of length k is v_1, h_1, ..., v_k, h_k, v_1 with distinct
vertices, distinct hyperedges, and v_i, v_{i+1} in h_i (indices mod k).
Length 2 is allowed, so two hyperedges sharing two vertices give girth 2.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class Hypergraph:
    order: int
    edges: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, order: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        seen = set()
        out = []
        for e in edges:
            e = tuple(sorted(set(e)))
            if len(e) < 2:
                raise ValueError(f"hyperedge {e} has fewer than 2 vertices")
            if e[0] < 0 or e[-1] >= order:
                raise ValueError(f"hyperedge {e} leaves 0..{order - 1}")
            if e not in seen:
                seen.add(e)
                out.append(e)
        return cls(order, tuple(out))

    @property
    def m(self) -> int:
        return len(self.edges)

    def uniformity(self) -> int | None:
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def incidence(self) -> list[list[int]]:
        inc: list[list[int]] = [[] for _ in range(self.order)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return inc

    def degrees(self) -> list[int]:
        return [len(x) for x in self.incidence()]


@dataclass(frozen=True)
class BergeCycleWitness:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def is_valid(self, h: Hypergraph) -> bool:
        k = len(self.vertices)
        if k < 2 or len(self.edges) != k:
            return False
        if len(set(self.vertices)) != k or len(set(self.edges)) != k:
            return False
        return all(
            self.vertices[i] in h.edges[self.edges[i]]
            and self.vertices[(i + 1) % k] in h.edges[self.edges[i]]
            for i in range(k)
        )


def has_berge_cycle(h: Hypergraph, k: int) -> BergeCycleWitness | None:
    """Find a Berge-C_k, anchored at its smallest vertex, or return None."""
    if k < 2:
        raise ValueError("Berge cycles have length at least 2")
    if k > h.order or k > h.m:
        return None
    inc = h.incidence()
    members = [set(e) for e in h.edges]

    def extend(vs: list[int], es: list[int]):
        v = vs[-1]
        if len(vs) == k:
            for e in inc[v]:
                if e not in es and vs[0] in members[e]:
                    return BergeCycleWitness(tuple(vs), tuple(es + [e]))
            return None
        for e in inc[v]:
            if e in es:
                continue
            for w in h.edges[e]:
                if w > vs[0] and w not in vs:
                    found = extend(vs + [w], es + [e])
                    if found:
                        return found
        return None

    for v1 in range(h.order):
        found = extend([v1], [])
        if found:
            return found
    return None


def hypergraph_girth(h: Hypergraph, ceiling: int) -> int | None:
    """Shortest Berge cycle length up to ``ceiling``; None means it exceeds it."""
    if ceiling < 2:
        raise ValueError("ceiling must be at least 2")
    for k in range(2, ceiling + 1):
        if has_berge_cycle(h, k):
            return k
    return None


def sum_edge_sizes(h: Hypergraph) -> int:
    return sum(len(e) for e in h.edges)


def _closes_short_cycle(inc, edges, cand: Sequence[int], max_len: int) -> bool:
    """Would adding ``cand`` create a Berge cycle of length <= max_len?

    Such a cycle through ``cand`` is a Berge path of at most max_len - 1 edges
    between two vertices of ``cand``; shortest Berge paths are shortest paths
    in the 2-section, so a depth-bounded BFS decides it.
    """
    if max_len < 2:
        return False
    targets = set(cand)
    for u in cand:
        dist = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if dist[x] == max_len - 1:
                continue
            for e in inc[x]:
                for y in edges[e]:
                    if y not in dist:
                        if y in targets:
                            return True
                        dist[y] = dist[x] + 1
                        queue.append(y)
    return False


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def random_greedy_hypergraph(n: int, r: int, g: int, target_m: int, seed: int) -> Hypergraph:
    """Seeded random-greedy r-uniform hypergraph of girth at least ``g``.

    Candidates are uniform r-subsets; a candidate is kept iff it is new and
    closes no Berge cycle shorter than ``g``.  Stops at ``target_m`` edges or
    after ``50 * target_m`` rejections.
    """
    if r < 2 or g < 2:
        raise ValueError("need r >= 2 and g >= 2")
    if r > n:
        return Hypergraph(n, ())
    rng = _rng(seed)
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    inc: list[list[int]] = [[] for _ in range(n)]
    rejections = 0
    while len(edges) < target_m and rejections < 50 * target_m:
        cand = tuple(sorted(int(x) for x in rng.choice(n, size=r, replace=False)))
        if cand in seen or _closes_short_cycle(inc, edges, cand, g - 1):
            rejections += 1
            continue
        seen.add(cand)
        for v in cand:
            inc[v].append(len(edges))
        edges.append(cand)
    h = Hypergraph(n, tuple(edges))
    if g > 2:
        assert hypergraph_girth(h, g - 1) is None, "greedy generator broke its girth floor"
    return h


def ellis_linial_order(r: int, g: int, d: int) -> int:
    """n_r(g, d) = (r-1)(1 + d(r-1) * sum_{i<g} ((d-1)(r-1))^i).

    The geometric sum replaces the closed-form quotient so that the
    degenerate case (d-1)(r-1) = 1 stays defined.
    """
    x = (d - 1) * (r - 1)
    geom = sum(x ** i for i in range(g))
    return (r - 1) * (1 + d * (r - 1) * geom)


def regular_uniform_high_girth(r: int, d: int, g: int, seed: int,
                               restarts: int = 20, max_order: int | None = None) -> Hypergraph | None:
    """Randomised search for an r-uniform d-regular hypergraph of girth >= g.

    Tries vertex counts upward from the smallest feasible one, with
    ``restarts`` random attempts per count.  Returns None when nothing is found.
    """
    if r < 2 or d < 2 or g < 3:
        raise ValueError("need r >= 2, d >= 2, g >= 3")
    if max_order is None:
        max_order = min(ellis_linial_order(r, g, d), 200)
    rng = _rng(seed)
    for n in range(r, max_order + 1):
        if (n * d) % r:
            continue
        for _ in range(restarts):
            h = _regular_attempt(n, r, d, g, rng)
            if h is not None:
                assert hypergraph_girth(h, g - 1) is None
                assert all(x == d for x in h.degrees())
                return h
    return None


def _regular_attempt(n, r, d, g, rng, tries: int = 60) -> Hypergraph | None:
    deficit = [d] * n
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    inc: list[list[int]] = [[] for _ in range(n)]
    while len(edges) < n * d // r:
        open_ = [v for v in range(n) if deficit[v] > 0]
        if len(open_) < r:
            return None
        top = max(deficit[v] for v in open_)
        heads = [v for v in open_ if deficit[v] == top]
        for _ in range(tries):
            head = heads[int(rng.integers(len(heads)))]
            others = [v for v in open_ if v != head]
            pick = rng.choice(len(others), size=r - 1, replace=False)
            cand = tuple(sorted([head] + [others[int(i)] for i in pick]))
            if cand not in seen and not _closes_short_cycle(inc, edges, cand, g - 1):
                break
        else:
            return None
        seen.add(cand)
        for v in cand:
            inc[v].append(len(edges))
            deficit[v] -= 1
        edges.append(cand)
    return Hypergraph(n, tuple(edges))
