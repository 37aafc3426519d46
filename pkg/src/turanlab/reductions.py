"""Random bipartition and random cyclic partition, with retention estimates.

Both reductions colour vertices from a Philox stream keyed by the seed; trial
i of :func:`estimate_retention` uses row i of one ``(trials, n)`` draw, so row 0
is exactly the colouring the single-shot subgraph functions use.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .counting import iter_cycles
from .graph import Graph, build_graph

BIPARTITION = "bipartition"
CYCLIC = "cyclic"


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def _colour_draw(n: int, classes: int, seed: int, trials: int | None = None) -> np.ndarray:
    size = n if trials is None else (trials, n)
    return _rng(seed).integers(0, classes, size=size)


def _keep_mask(colours: np.ndarray, us: np.ndarray, vs: np.ndarray, classes: int) -> np.ndarray:
    cu = colours[..., us]
    cv = colours[..., vs]
    if classes == 2:
        return cu != cv
    diff = (cu - cv) % classes
    return (diff == 1) | (diff == classes - 1)


def _check_classes(classes: int) -> None:
    if classes < 3 or classes % 2 == 0:
        raise ValueError("the cyclic partition needs an odd number of classes >= 3")


def random_bipartition_subgraph(g: Graph, seed: int) -> Graph:
    """Keep exactly the edges between the two colour classes of a fair 2-colouring."""
    edges = g.edges()
    colours = _colour_draw(g.n, 2, seed)
    return build_graph(g.n, [(u, v) for u, v in edges if colours[u] != colours[v]])


def random_cyclic_partition_subgraph(g: Graph, classes: int, seed: int) -> Graph:
    """Keep only edges between cyclically consecutive classes V_i, V_{i+1}."""
    _check_classes(classes)
    colours = _colour_draw(g.n, classes, seed)
    keep = [(u, v) for u, v in g.edges()
            if (colours[u] - colours[v]) % classes in (1, classes - 1)]
    return build_graph(g.n, keep)


def retention_floor(reduction: str, cycle_len: int) -> Fraction:
    """Per-cycle retention probability the reduction is credited with."""
    if reduction == BIPARTITION:
        return Fraction(1, 2 ** (cycle_len - 1))
    if reduction == CYCLIC:
        return Fraction(1, cycle_len ** (cycle_len - 1))
    raise ValueError(f"unknown reduction {reduction!r}")


def exact_cycle_retention(cycle_len: int, reduction: str, classes: int = 2) -> Fraction:
    """Enumerate every colouring of one fixed C_{cycle_len}; return the kept fraction."""
    if reduction == BIPARTITION:
        classes = 2
    else:
        _check_classes(classes)
    kept = 0
    total = 0
    for colours in product(range(classes), repeat=cycle_len):
        total += 1
        ok = True
        for i in range(cycle_len):
            a, b = colours[i], colours[(i + 1) % cycle_len]
            if classes == 2:
                ok = a != b
            else:
                ok = (a - b) % classes in (1, classes - 1)
            if not ok:
                break
        kept += ok
    return Fraction(kept, total)


@dataclass(frozen=True)
class RetentionEstimate:
    reduction: str
    classes: int
    cycle_len: int
    trials: int
    seed: int
    base_count: int
    mean: float
    stderr: float
    floor: Fraction

    def to_dict(self) -> dict:
        return {
            "reduction": self.reduction,
            "classes": self.classes,
            "cycle_len": self.cycle_len,
            "trials": self.trials,
            "seed": self.seed,
            "base_count": str(self.base_count),
            "mean": self.mean,
            "stderr": self.stderr,
            "floor": str(self.floor),
            "floor_float": float(self.floor),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def retained_counts(g: Graph, cycle_len: int, reduction: str, classes: int,
                    trials: int, seed: int, chunk: int = 20000) -> tuple[int, np.ndarray]:
    """(base cycle count, per-trial retained cycle counts)."""
    cycles = list(iter_cycles(g, cycle_len))
    if not cycles:
        raise ValueError(f"graph has no {cycle_len}-cycles to retain")
    index = {e: i for i, e in enumerate(g.edges())}
    cyc_edges = np.array([
        [index[tuple(sorted((c[i], c[(i + 1) % cycle_len])))] for i in range(cycle_len)]
        for c in cycles
    ])
    edge_arr = np.array(g.edges())
    colours = _colour_draw(g.n, classes, seed, trials)
    out = np.empty(trials, dtype=np.int64)
    for lo in range(0, trials, chunk):
        block = colours[lo:lo + chunk]
        keep = _keep_mask(block, edge_arr[:, 0], edge_arr[:, 1], classes)
        out[lo:lo + chunk] = keep[:, cyc_edges].all(axis=2).sum(axis=1)
    return len(cycles), out


def estimate_retention(g: Graph, cycle_len: int, reduction: str = BIPARTITION,
                       classes: int | None = None, trials: int = 10_000,
                       seed: int = 0) -> RetentionEstimate:
    if trials < 1:
        raise ValueError("need at least one trial")
    if reduction == BIPARTITION:
        classes = 2
    elif reduction == CYCLIC:
        classes = cycle_len if classes is None else classes
        _check_classes(classes)
    else:
        raise ValueError(f"unknown reduction {reduction!r}")
    base, kept = retained_counts(g, cycle_len, reduction, classes, trials, seed)
    fractions = kept / base
    mean = float(fractions.mean())
    stderr = float(fractions.std(ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
    return RetentionEstimate(reduction, classes, cycle_len, trials, seed, base, mean, stderr,
                             retention_floor(reduction, cycle_len))
