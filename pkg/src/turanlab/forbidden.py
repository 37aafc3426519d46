"""Girth, cycle presence and C_A-freeness."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .counting import iter_cycles
from .graph import Graph, bipartition, iter_bits


@dataclass(frozen=True)
class ForbiddenSet:
    """A set A of forbidden cycle lengths."""

    lengths: frozenset[int]

    def __init__(self, lengths: Iterable[int] = ()):
        lengths = frozenset(int(a) for a in lengths)
        bad = sorted(a for a in lengths if a < 3)
        if bad:
            raise ValueError(f"cycle lengths must be >= 3, got {bad}")
        object.__setattr__(self, "lengths", lengths)

    @classmethod
    def up_to(cls, top: int, *extra: int) -> "ForbiddenSet":
        """All lengths 3..top, plus ``extra``; the family of short cycles."""
        return cls(set(range(3, top + 1)) | set(extra))

    @classmethod
    def parse(cls, text: str) -> "ForbiddenSet":
        """Parse ``"3,4,9"`` or ``"3-5,8"``."""
        out: set[int] = set()
        for part in filter(None, (p.strip() for p in text.split(","))):
            lo, sep, hi = part.partition("-")
            out.update(range(int(lo), int(hi) + 1) if sep else [int(lo)])
        return cls(out)

    @property
    def even(self) -> "ForbiddenSet":
        return ForbiddenSet(a for a in self.lengths if a % 2 == 0)

    @property
    def odd(self) -> "ForbiddenSet":
        return ForbiddenSet(a for a in self.lengths if a % 2 == 1)

    def __contains__(self, k: object) -> bool:
        return k in self.lengths

    def __iter__(self):
        return iter(sorted(self.lengths))

    def __len__(self) -> int:
        return len(self.lengths)

    def __or__(self, other: "ForbiddenSet") -> "ForbiddenSet":
        return ForbiddenSet(self.lengths | other.lengths)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


@dataclass(frozen=True)
class FreeCheck:
    free: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.free


@dataclass(frozen=True)
class CycleSpectrum:
    present: dict[int, bool]
    girth: float

    def lengths(self) -> set[int]:
        return {k for k, p in self.present.items() if p}


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in iter_bits(g.rows[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def find_cycle(g: Graph, k: int) -> tuple[int, ...] | None:
    return next(iter_cycles(g, k), None)


def has_cycle_of_length(g: Graph, k: int) -> bool:
    return find_cycle(g, k) is not None


def is_free(g: Graph, forbidden: ForbiddenSet | Iterable[int]) -> FreeCheck:
    if not isinstance(forbidden, ForbiddenSet):
        forbidden = ForbiddenSet(forbidden)
    lengths = [k for k in forbidden if k <= g.n]
    if any(k % 2 for k in lengths) and bipartition(g) is not None:
        # no odd cycles at all, so skip the exhaustive searches
        lengths = [k for k in lengths if k % 2 == 0]
    for k in lengths:
        witness = find_cycle(g, k)
        if witness is not None:
            return FreeCheck(False, witness)
    return FreeCheck(True)


def cycle_spectrum(g: Graph, ceiling: int) -> CycleSpectrum:
    if ceiling < 3:
        raise ValueError("ceiling must be at least 3")
    present = {k: has_cycle_of_length(g, k) for k in range(3, ceiling + 1)}
    found = [k for k, p in present.items() if p]
    return CycleSpectrum(present, min(found) if found else girth(g))


def is_valid_cycle(g: Graph, seq: tuple[int, ...]) -> bool:
    k = len(seq)
    return (k >= 3 and len(set(seq)) == k
            and all(g.has_edge(seq[i], seq[(i + 1) % k]) for i in range(k)))
