"""Lower-bound constructions.

Each generator documents its vertex layout.  :func:`construction_spec` pairs a
named construction with the cycle lengths it must avoid and a copy count it
must reach, so every instance can be checked after the fact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from math import ceil, comb
from typing import Callable, Sequence

from .berge import Hypergraph, random_greedy_hypergraph, regular_uniform_high_girth
from .counting import Pattern, count_pattern, cycle, path
from .forbidden import ForbiddenSet, is_free
from .graph import Graph, GraphError, build_graph, cycle_graph, with_isolated


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts ``0..a-1`` and ``a..a+b-1``."""
    if a < 0 or b < 0:
        raise GraphError("part sizes must be non-negative")
    return build_graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def theta_graph(l: int, t: int) -> Graph:
    """Endpoints 0 and 1 joined by ``t`` internally disjoint paths of length ``l``.

    Path i uses interior vertices ``2 + i(l-1) .. 2 + (i+1)(l-1) - 1`` in order
    from endpoint 0 to endpoint 1.
    """
    if l < 2:
        raise GraphError("theta paths need length at least 2")
    if t < 1:
        raise GraphError("need at least one path")
    edges = []
    for i in range(t):
        inner = list(range(2 + i * (l - 1), 2 + (i + 1) * (l - 1)))
        chain = [0] + inner + [1]
        edges.extend(zip(chain, chain[1:]))
    return build_graph(2 + t * (l - 1), edges)


def theta_multiplicity(n: int, f: Graph, l: int) -> int:
    return (n - f.n) // (f.m * (l - 1))


def theta_of_graph(n: int, f: Graph, l: int) -> Graph:
    """Replace each edge of ``f`` by an (l, t)-theta graph, t as large as n allows.

    Vertices ``0..|V(F)|-1`` are F's; the interior vertices of the theta on the
    j-th edge of F (lexicographic order) follow in blocks; isolated vertices
    pad the order to exactly ``n``.
    """
    if f.m < 1:
        raise GraphError("template graph needs an edge")
    if l < 2:
        raise GraphError("theta paths need length at least 2")
    t = theta_multiplicity(n, f, l)
    if t < 1:
        raise GraphError(f"n={n} too small: need at least {f.n + f.m * (l - 1)} vertices")
    edges = []
    nxt = f.n
    for x, y in f.edges():
        for _ in range(t):
            chain = [x] + list(range(nxt, nxt + l - 1)) + [y]
            nxt += l - 1
            edges.extend(zip(chain, chain[1:]))
    return with_isolated(build_graph(nxt, edges), n - nxt)


def _class_sizes(b: int | Sequence[int], classes: int) -> list[int]:
    sizes = [b] * classes if isinstance(b, int) else list(b)
    if len(sizes) != classes or min(sizes) < 1:
        raise GraphError(f"need {classes} blow-up sizes, each >= 1")
    return sizes


def blown_up_cycle(two_l: int, b: int | Sequence[int]) -> Graph:
    """C_{2l} with every second vertex replaced by an independent set.

    Fixed vertices are ``0..l-1``; class i (between fixed i and fixed i+1 mod l)
    follows in order.  ``b`` is one size for all classes or a list of l sizes.
    """
    if two_l % 2 or two_l < 6:
        raise GraphError("blown-up cycle needs an even length >= 6")
    l = two_l // 2
    sizes = _class_sizes(b, l)
    edges = []
    nxt = l
    for i, size in enumerate(sizes):
        for v in range(nxt, nxt + size):
            edges += [(i, v), ((i + 1) % l, v)]
        nxt += size
    return build_graph(nxt, edges)


def blown_up_cycle_for_order(n: int, two_l: int) -> Graph:
    """Blown-up C_{2l} on exactly n vertices with class sizes floor/ceil(n/l - 1)."""
    l = two_l // 2
    q, r = divmod(n - l, l)
    if q < 1:
        raise GraphError(f"n={n} too small for a blown-up C_{two_l}")
    return blown_up_cycle(two_l, [q + 1] * r + [q] * (l - r))


def blown_up_path(l: int, b: int) -> Graph:
    """Path v_1..v_l where each odd-position vertex becomes ``b`` twins.

    Positions are laid out left to right; an odd position occupies b
    consecutive indices, an even one a single index.
    """
    if l < 2 or b < 1:
        raise GraphError("need l >= 2 and b >= 1")
    blocks = []
    nxt = 0
    for i in range(1, l + 1):
        size = b if i % 2 else 1
        blocks.append(range(nxt, nxt + size))
        nxt += size
    edges = [(u, v) for left, right in zip(blocks, blocks[1:]) for u in left for v in right]
    return build_graph(nxt, edges)


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q ** 0.5) + 1))


def projective_points(q: int) -> list[tuple[int, int, int]]:
    """Points of PG(2, q), first nonzero coordinate normalised to 1."""
    pts = [(1, y, z) for y in range(q) for z in range(q)]
    pts += [(0, 1, z) for z in range(q)]
    pts.append((0, 0, 1))
    return pts


def polarity_graph(q: int) -> Graph:
    """Erdos-Renyi orthogonality graph on the q^2+q+1 points of PG(2, q), q prime."""
    if not _is_prime(q):
        raise GraphError(f"q={q} is not prime")
    pts = projective_points(q)
    edges = [
        (i, j)
        for i, p in enumerate(pts)
        for j in range(i + 1, len(pts))
        if sum(a * c for a, c in zip(p, pts[j])) % q == 0
    ]
    return build_graph(len(pts), edges)


def hyperedge_cycle_expansion(h: Hypergraph, c: int) -> Graph:
    """Replace each c-vertex hyperedge by the cycle through its vertices in ascending order."""
    if h.m and h.uniformity() != c:
        raise GraphError(f"hypergraph is not {c}-uniform")
    edges = []
    for e in h.edges:
        edges.extend((e[i], e[(i + 1) % c]) for i in range(c))
    return build_graph(h.order, edges)


def incidence_expansion(h: Hypergraph, s: int) -> Graph:
    """Attach ``s`` new vertices to each hyperedge, joined to all of its members.

    Original vertices keep their indices; the pendant set of hyperedge i is
    ``order + i*s .. order + (i+1)*s - 1``.
    """
    if s < 1:
        raise GraphError("pendant sets need at least one vertex")
    r = h.uniformity()
    if h.m and r is None:
        raise GraphError("hypergraph is not uniform")
    edges = []
    for i, e in enumerate(h.edges):
        for j in range(s):
            p = h.order + i * s + j
            edges.extend((v, p) for v in e)
    g = build_graph(h.order + h.m * s, edges)
    assert all(g.degree(h.order + i) == r for i in range(h.m * s))
    return g


# ---------------------------------------------------------------------------
# Construction specs

@dataclass(frozen=True)
class ConstructionSpec:
    name: str
    params: dict[str, int]
    expected_free: ForbiddenSet
    guaranteed: tuple[Pattern, int]
    graph: Graph = field(repr=False, compare=False)

    def to_dict(self) -> dict:
        pattern, value = self.guaranteed
        return {
            "name": self.name,
            "params": dict(self.params),
            "expected_free": sorted(self.expected_free.lengths),
            "guaranteed": {"pattern": pattern.kind, "k": pattern.k, "count": str(value)},
            "n": self.graph.n,
            "m": self.graph.m,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def check(self) -> tuple[bool, dict]:
        """Instantiate-and-verify: freeness plus the count guarantee."""
        free = is_free(self.graph, self.expected_free)
        measured = count_pattern(self.graph, self.guaranteed[0]).count
        ok = free.free and measured >= self.guaranteed[1]
        return ok, {"free": free.free, "witness": free.witness, "count": measured}


def _all_but(allowed: set[int], top: int) -> ForbiddenSet:
    return ForbiddenSet(set(range(3, top + 1)) - allowed)


def _spec_complete_bipartite(a: int, b: int) -> ConstructionSpec:
    g = complete_bipartite(a, b)
    small = min(a, b)
    allowed = set(range(4, 2 * small + 1, 2))
    return ConstructionSpec("complete_bipartite", {"a": a, "b": b},
                            _all_but(allowed, max(a + b, 3)),
                            (cycle(4), comb(a, 2) * comb(b, 2)), g)


def _spec_theta(l: int, t: int) -> ConstructionSpec:
    g = theta_graph(l, t)
    allowed = {2 * l} if t >= 2 else set()
    return ConstructionSpec("theta", {"l": l, "t": t}, _all_but(allowed, max(g.n, 3)),
                            (cycle(2 * l), comb(t, 2)), g)


def _spec_theta_of_cycle(n: int, m: int, l: int) -> ConstructionSpec:
    f = cycle_graph(m)
    g = theta_of_graph(n, f, l)
    t = theta_multiplicity(n, f, l)
    allowed = {m * l} | ({2 * l} if t >= 2 else set())
    return ConstructionSpec("theta_of_cycle", {"n": n, "m": m, "l": l},
                            _all_but(allowed, min(n, max(allowed) + 2)),
                            (cycle(m * l), t ** m), g)


def _spec_blown_up_cycle(two_l: int, b: int) -> ConstructionSpec:
    g = blown_up_cycle(two_l, b)
    allowed = {two_l} | ({4} if b >= 2 else set())
    return ConstructionSpec("blown_up_cycle", {"two_l": two_l, "b": b},
                            _all_but(allowed, two_l + 2), (cycle(two_l), b ** (two_l // 2)), g)


def _spec_blown_up_path(l: int, b: int) -> ConstructionSpec:
    g = blown_up_path(l, b)
    allowed = {4} if b >= 2 and l >= 3 else set()
    return ConstructionSpec("blown_up_path", {"l": l, "b": b},
                            _all_but(allowed, max(min(g.n, 12), 3)),
                            (path(l), b ** ceil(l / 2)), g)


def _spec_polarity(q: int) -> ConstructionSpec:
    g = polarity_graph(q)
    return ConstructionSpec("polarity", {"q": q}, ForbiddenSet({4}),
                            (path(2), q * (q + 1) ** 2 // 2), g)


def _spec_hyperedge_cycles(n: int, c: int, g: int, m: int, seed: int) -> ConstructionSpec:
    h = random_greedy_hypergraph(n, c, g, m, seed)
    graph = hyperedge_cycle_expansion(h, c)
    return ConstructionSpec("hyperedge_cycles", {"n": n, "c": c, "g": g, "m": m, "seed": seed},
                            _all_but({c}, g - 1), (cycle(c), h.m), graph)


def _spec_incidence(r: int, d: int, s: int, seed: int) -> ConstructionSpec:
    # r = k-1 and girth k+1 make the expansion C_{2k}-free
    k = r + 1
    h = regular_uniform_high_girth(r, d, k + 1, seed)
    if h is None:
        raise GraphError(f"no {r}-uniform {d}-regular hypergraph of girth {k + 1} found")
    graph = incidence_expansion(h, s)
    odd = set(range(3, max(graph.n, 3) + 1, 2))
    return ConstructionSpec("incidence", {"r": r, "d": d, "s": s, "seed": seed},
                            ForbiddenSet(odd | {2 * k}), (path(2), h.m * s * r), graph)


SPEC_BUILDERS: dict[str, Callable[..., ConstructionSpec]] = {
    "complete_bipartite": _spec_complete_bipartite,
    "theta": _spec_theta,
    "theta_of_cycle": _spec_theta_of_cycle,
    "blown_up_cycle": _spec_blown_up_cycle,
    "blown_up_path": _spec_blown_up_path,
    "polarity": _spec_polarity,
    "hyperedge_cycles": _spec_hyperedge_cycles,
    "incidence": _spec_incidence,
}

SPEC_DEFAULTS: dict[str, dict[str, int]] = {
    "hyperedge_cycles": {"n": 25, "c": 5, "g": 7, "m": 10, "seed": 1},
    "incidence": {"r": 3, "d": 2, "s": 2, "seed": 1},
}


def construction_spec(name: str, **params: int) -> ConstructionSpec:
    try:
        builder = SPEC_BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown construction {name!r}; choose from {sorted(SPEC_BUILDERS)}") from None
    merged = {**SPEC_DEFAULTS.get(name, {}), **params}
    return builder(**merged)


def spec_grid() -> list[ConstructionSpec]:
    """Small-parameter grid used to check every generator against its spec."""
    specs = [construction_spec("complete_bipartite", a=a, b=b)
             for a, b in product(range(1, 5), range(1, 7)) if a <= b]
    specs += [construction_spec("theta", l=l, t=t) for l, t in product(range(2, 6), range(1, 5))]
    specs += [construction_spec("theta_of_cycle", n=n, m=m, l=l)
              for n, m, l in [(20, 3, 3), (15, 3, 3), (12, 3, 2), (17, 4, 2), (25, 5, 2), (27, 4, 3)]]
    specs += [construction_spec("blown_up_cycle", two_l=tl, b=b) for tl, b in product((6, 8, 10), (1, 2, 3))]
    specs += [construction_spec("blown_up_path", l=l, b=b) for l, b in product(range(2, 7), (1, 2, 3))]
    specs += [construction_spec("polarity", q=q) for q in (2, 3, 5)]
    specs += [construction_spec("hyperedge_cycles", n=25, c=5, g=7, m=10, seed=s) for s in (1, 2)]
    specs += [construction_spec("incidence", r=3, d=2, s=s, seed=1) for s in (1, 2)]
    return specs
