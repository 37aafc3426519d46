"""Exact ex(n, H, C_A) for tiny n by exhaustive search.

Two independent methods:

* ``naive``: every labelled graph on n <= 7 vertices, as an edge bitmask over
  the edges of K_n in lexicographic order.  Copies of the target and of each
  forbidden cycle are enumerated once in K_n by brute-force permutation, and a
  graph contains a copy iff it contains that copy's edge mask.  Vectorised
  with numpy over all masks.
* ``pruned``: branch and bound on edge decisions using the bit-row counting
  kernels; an include is refused when it closes a forbidden cycle, and a
  branch is cut when the target count of (current + undecided edges) cannot
  beat the incumbent.

Ties go to the maximiser with the numerically least edge mask (bit i is the
i-th edge of K_n in lexicographic order), so both methods return the same
witness.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable

import numpy as np

from .counting import Pattern, count_pattern, count_rows, iter_paths_between
from .forbidden import ForbiddenSet, is_free
from .graph import Graph, build_graph
from .io import format_graph6

NAIVE_MAX_N = 7
PRUNED_MAX_N = 9


@dataclass(frozen=True)
class ExtremalRecord:
    n: int
    target: Pattern
    forbidden: ForbiddenSet
    maximum: int
    witness: Graph
    method: str

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "target": str(self.target),
            "forbidden": sorted(self.forbidden.lengths),
            "max": str(self.maximum),
            "witness_graph6": format_graph6(self.witness).decode().strip(),
            "method": self.method,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _kn_edges(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def _graph_from_mask(n: int, mask: int) -> Graph:
    return build_graph(n, [e for i, e in enumerate(_kn_edges(n)) if mask >> i & 1])


def _copy_masks(n: int, pattern: Pattern) -> list[int]:
    """Edge masks of every copy of ``pattern`` inside K_n, one per copy."""
    index = {e: i for i, e in enumerate(_kn_edges(n))}

    def mask_of(seq, closed):
        pairs = list(zip(seq, seq[1:])) + ([(seq[-1], seq[0])] if closed else [])
        return sum(1 << index[(min(p), max(p))] for p in pairs)

    kind, k = pattern
    if k > n:
        return []
    masks = set()
    if kind == "cycle":
        for seq in permutations(range(n), k):
            if seq[0] == min(seq) and seq[1] < seq[-1]:
                masks.add(mask_of(seq, True))
    elif kind == "path":
        if k == 1:
            return [0] * n
        for seq in permutations(range(n), k):
            if seq[0] < seq[-1]:
                masks.add(mask_of(seq, False))
    else:
        raise ValueError("search targets must be cycles or paths")
    return sorted(masks)


def exact_extremal_naive(n: int, target: Pattern, forbidden: ForbiddenSet | Iterable[int],
                         chunk: int = 1 << 18) -> ExtremalRecord:
    if n > NAIVE_MAX_N:
        raise ValueError(f"naive search is limited to n <= {NAIVE_MAX_N}")
    forbidden = forbidden if isinstance(forbidden, ForbiddenSet) else ForbiddenSet(forbidden)
    n_edges = n * (n - 1) // 2
    target_masks = np.array(_copy_masks(n, target), dtype=np.uint32)
    bad_masks = np.array(sorted({m for a in forbidden for m in _copy_masks(n, Pattern("cycle", a))}),
                         dtype=np.uint32)
    best, best_mask = -1, 0
    total = 1 << n_edges
    for lo in range(0, total, chunk):
        graphs = np.arange(lo, min(total, lo + chunk), dtype=np.uint32)
        free = np.ones(len(graphs), dtype=bool)
        for p in bad_masks:
            free &= (graphs & p) != p
        counts = np.zeros(len(graphs), dtype=np.int64)
        for p in target_masks:
            counts += (graphs & p) == p
        counts[~free] = -1
        top = int(counts.max())
        if top > best:
            best = top
            best_mask = int(graphs[int(np.argmax(counts))])
    return ExtremalRecord(n, target, forbidden, best, _graph_from_mask(n, best_mask), "naive")


class _BranchAndBound:
    def __init__(self, n: int, target: Pattern, forbidden: ForbiddenSet):
        self.n = n
        self.target = target
        self.lengths = sorted(a for a in forbidden if a <= n)
        self.edges = _kn_edges(n)

    def closes_forbidden(self, rows, u: int, v: int) -> bool:
        return any(next(iter_paths_between(rows, u, v, a - 1), None) is not None
                   for a in self.lengths)

    def run(self, order: list[int], include_first: bool, floor: int, stop_at: int | None):
        """DFS over edge decisions in ``order``.

        Keeps leaves whose count beats ``floor`` (strictly), or returns the
        first leaf reaching ``stop_at`` when that is given.
        """
        n = self.n
        rows = [0] * n
        union = [0] * n
        for u, v in self.edges:
            union[u] |= 1 << v
            union[v] |= 1 << u
        best = [floor, None]

        def visit(depth: int, mask: int):
            ub = count_rows(union, self.target)
            if stop_at is None and ub <= best[0]:
                return None
            if stop_at is not None and ub < stop_at:
                return None
            if depth == len(order):
                if stop_at is not None:
                    return mask if ub >= stop_at else None
                best[0], best[1] = ub, mask
                return None
            i = order[depth]
            u, v = self.edges[i]
            choices = (True, False) if include_first else (False, True)
            for take in choices:
                if take:
                    if self.closes_forbidden(rows, u, v):
                        continue
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                    found = visit(depth + 1, mask | 1 << i)
                    rows[u] &= ~(1 << v)
                    rows[v] &= ~(1 << u)
                else:
                    union[u] &= ~(1 << v)
                    union[v] &= ~(1 << u)
                    found = visit(depth + 1, mask)
                    union[u] |= 1 << v
                    union[v] |= 1 << u
                if found is not None:
                    return found
            return None

        found = visit(0, 0)
        return found if stop_at is not None else (best[0], best[1])


def exact_extremal_pruned(n: int, target: Pattern,
                          forbidden: ForbiddenSet | Iterable[int]) -> ExtremalRecord:
    if n > PRUNED_MAX_N:
        raise ValueError(f"pruned search is limited to n <= {PRUNED_MAX_N}")
    forbidden = forbidden if isinstance(forbidden, ForbiddenSet) else ForbiddenSet(forbidden)
    if target.kind not in ("cycle", "path"):
        raise ValueError("search targets must be cycles or paths")
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 200))
    bb = _BranchAndBound(n, target, forbidden)
    n_edges = len(bb.edges)
    # phase 1: the maximum, dense-first
    maximum, _ = bb.run(list(range(n_edges)), include_first=True, floor=-1, stop_at=None)
    # phase 2: least mask achieving it; deciding high edges first, excluding first,
    # visits leaves in increasing mask order
    mask = bb.run(list(range(n_edges - 1, -1, -1)), include_first=False, floor=-1, stop_at=maximum)
    witness = _graph_from_mask(n, mask)
    assert count_pattern(witness, target).count == maximum
    assert is_free(witness, forbidden).free
    return ExtremalRecord(n, target, forbidden, maximum, witness, "pruned")


def exact_extremal(n: int, target: Pattern, forbidden, method: str = "pruned") -> ExtremalRecord:
    if method == "naive":
        return exact_extremal_naive(n, target, forbidden)
    if method == "pruned":
        return exact_extremal_pruned(n, target, forbidden)
    raise ValueError(f"unknown search method {method!r}")


def extremal_table(n_range: Iterable[int], target: Pattern, forbidden,
                   method: str = "pruned") -> list[ExtremalRecord]:
    return [exact_extremal(n, target, forbidden, method) for n in n_range]


CSV_COLUMNS = ["n", "target", "forbidden", "max", "witness_graph6"]


def table_csv(records: list[ExtremalRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        d = r.to_dict()
        writer.writerow([d["n"], d["target"], " ".join(map(str, d["forbidden"])),
                         d["max"], d["witness_graph6"]])
    return buf.getvalue()
