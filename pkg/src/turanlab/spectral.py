"""Spectral radius by power iteration and the walk-count bounds on path counts."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .counting import count_paths, count_walks
from .graph import Graph, bipartition

WALK_EPS = 1e-6


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class SpectralReport:
    mu: float
    residual: float
    iterations: int
    flag: str = "ok"
    l: int | None = None
    walk_ratio: Fraction | None = None
    path_lhs: Fraction | None = None
    chain_holds: bool | None = None

    def to_dict(self) -> dict:
        d = {"mu": self.mu, "residual": self.residual, "iterations": self.iterations,
             "flag": self.flag}
        if self.l is not None:
            d.update(l=self.l, walk_ratio=str(self.walk_ratio), path_lhs=str(self.path_lhs),
                     chain_holds=self.chain_holds)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def spectral_radius(g: Graph, tol: float = 1e-13, max_iter: int = 200_000) -> SpectralReport:
    """Largest adjacency eigenvalue.

    Iterates A^2 from the all-ones vector, which sidesteps the +/-mu
    oscillation of bipartite graphs; mu is the square root of the Rayleigh
    quotient of A^2.  Stops once successive estimates differ by less than
    tol (relative once mu exceeds 1).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if g.m == 0:
        return SpectralReport(0.0, 0.0, 0, flag="edgeless")
    a = g.adjacency_matrix()
    x = np.ones(g.n) / math.sqrt(g.n)
    prev = -1.0
    for it in range(1, max_iter + 1):
        y = a @ x
        rq = float(y @ y)  # x has unit norm, so this is x^T A^2 x
        z = a @ y
        mu = math.sqrt(rq)
        if abs(mu - prev) < tol * max(1.0, mu):
            residual = float(np.linalg.norm(z - rq * x))
            return SpectralReport(mu, residual, it)
        prev = mu
        x = z / np.linalg.norm(z)
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")


def walk_chain_check(g: Graph, l: int, eps: float = WALK_EPS, tol: float = 1e-13) -> SpectralReport:
    """2 N(P_l)/n <= N(W_l)/n <= mu^(l-1) (1 + eps), exact on the left."""
    if l < 2:
        raise ValueError("need l >= 2")
    spec = spectral_radius(g, tol=tol)
    path_lhs = Fraction(2 * count_paths(g, l).count, g.n)
    walk_ratio = Fraction(count_walks(g, l).count, g.n)
    holds = path_lhs <= walk_ratio and float(walk_ratio) <= spec.mu ** (l - 1) * (1 + eps)
    return SpectralReport(spec.mu, spec.residual, spec.iterations, spec.flag,
                          l, walk_ratio, path_lhs, holds)


def nikiforov_even_bound(n: int, k: int) -> float:
    """(k-1)/2 + sqrt((k-1) n); the o(n) term is dropped, so this is a diagnostic only."""
    return (k - 1) / 2 + math.sqrt((k - 1) * n)


def nikiforov_odd_bound(n: int) -> float:
    return math.sqrt(n * n / 4)


def odd_bound_threshold(k: int) -> int:
    """Orders above this make the odd-cycle spectral bound unconditional."""
    return 320 * (2 * k + 1)


@dataclass(frozen=True)
class PathBoundReport:
    which: str
    k: int
    l: int
    n: int
    count: int
    bound: Fraction | float
    holds: bool
    asserted: bool
    reason: str = field(default="")

    def to_dict(self) -> dict:
        return {"which": self.which, "k": self.k, "l": self.l, "n": self.n,
                "count": str(self.count), "bound": str(self.bound), "holds": self.holds,
                "asserted": self.asserted, "reason": self.reason}


def path_upper_bound_check(g: Graph, l: int, which: str, k: int) -> PathBoundReport:
    """Compare N(P_l, G) with the path bound for a C_{2k+1}-free (odd) or C_{2k}-free (even) G.

    The caller certifies freeness.  The odd bound (n/2)^l is asserted when n
    exceeds 320(2k+1) or G is bipartite (then mu <= sqrt(m) <= n/2
    holds outright); otherwise, and always for the even bound, it is reported only.
    """
    count = count_paths(g, l).count
    if which == "odd":
        bound = Fraction(g.n, 2) ** l
        if g.n > odd_bound_threshold(k):
            asserted, reason = True, "n above threshold"
        elif bipartition(g) is not None:
            asserted, reason = True, "bipartite"
        else:
            asserted, reason = False, "n below threshold"
        return PathBoundReport("odd", k, l, g.n, count, bound, count <= bound, asserted, reason)
    if which == "even":
        bound = 0.5 * (k - 1) ** ((l - 1) / 2) * g.n ** ((l + 1) / 2)
        return PathBoundReport("even", k, l, g.n, count, bound, count <= bound, False,
                               "asymptotic bound, diagnostic")
    raise ValueError("which must be 'odd' or 'even'")
