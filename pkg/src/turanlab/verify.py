"""Named verification suites that regenerate the construction and bound tables.

Each suite returns a :class:`VerifySuite` of cases.  A case states a relation
(``=``, ``>=``, ``<=``, ``free``, ``ratio>=``) between a measured value and an
expected one; the suite passes iff every case does.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from .berge import hypergraph_girth, random_greedy_hypergraph
from .config import DEFAULT_TOLERANCES
from .constructions import (blown_up_cycle_for_order, complete_bipartite, hyperedge_cycle_expansion,
                            theta_multiplicity, theta_of_graph)
from .counting import (closed_form_bipartite_cycles, count_cycles,
                       odd_cycles_through_vertex)
from .forbidden import ForbiddenSet, cycle_spectrum, is_free
from .graph import Graph, complete_graph, cycle_graph, petersen_graph, random_bipartite_graph, random_graph
from .reductions import BIPARTITION, CYCLIC, estimate_retention, exact_cycle_retention, retention_floor
from .spectral import path_upper_bound_check, walk_chain_check


@dataclass
class Case:
    params: dict
    relation: str
    expected: str
    measured: str
    passed: bool
    note: str = ""


@dataclass
class VerifySuite:
    suite: str
    cases: list[Case] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def add(self, params: dict, relation: str, expected, measured, passed: bool, note: str = ""):
        self.cases.append(Case(dict(params), relation, str(expected), str(measured), bool(passed), note))

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "status": "pass" if self.passed else "fail",
            "cases": [c.__dict__ for c in self.cases],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "params", "relation", "expected", "measured", "passed", "note"])
        for c in self.cases:
            w.writerow([self.suite, json.dumps(c.params, sort_keys=True), c.relation,
                        c.expected, c.measured, c.passed, c.note])
        return buf.getvalue()


def suite_thm3(k: int = 3, l: int = 2, ns=(10, 20, 40)) -> VerifySuite:
    """C_{2l} counts of the C_{2k}-free lower-bound constructions."""
    s = VerifySuite("thm3")
    for n in ns:
        p = {"k": k, "l": l, "n": n}
        if l < k:
            g = complete_bipartite(k - 1, n - k + 1)
            counted = count_cycles(g, 2 * l).count
            closed = closed_form_bipartite_cycles(k - 1, n - k + 1, l)
            s.add(p, "=", closed, counted, counted == closed, "K_{k-1,n-k+1}")
            s.add(p, "free", f"C_{2 * k}", is_free(g, {2 * k}).free, is_free(g, {2 * k}).free)
        elif l > k >= 3:
            g = blown_up_cycle_for_order(n, 2 * l)
            spec = cycle_spectrum(g, 2 * l + 2).lengths()
            s.add(p, "<=", "{4,%d}" % (2 * l), sorted(spec), spec <= {4, 2 * l}, "blown-up cycle spectrum")
            s.add(p, "free", f"C_{2 * k}", 2 * k not in spec, 2 * k not in spec)
            b = (n - l) // l
            counted = count_cycles(g, 2 * l).count
            s.add(p, ">=", b ** l, counted, counted >= b ** l, "one clone per class")
        else:
            s.add(p, "=", "l != k", "l == k", False, "no construction for l == k")
    return s


def suite_thm4(k: int = 3, ns=(10, 20, 40, 80), tol=DEFAULT_TOLERANCES) -> VerifySuite:
    """C_4 in K_{k-1,n-k+1}: exact count, and its ratio to (k-1)(k-2)n^2/4."""
    s = VerifySuite("thm4")
    ratios = []
    for n in ns:
        p = {"k": k, "n": n}
        g = complete_bipartite(k - 1, n - k + 1)
        counted = count_cycles(g, 4).count
        exact = comb(k - 1, 2) * comb(n - k + 1, 2)
        s.add(p, "=", exact, counted, counted == exact)
        ratio = Fraction(counted * 4, (k - 1) * (k - 2) * n * n)
        ratios.append(ratio)
    top = ratios[-1]
    s.add({"k": k, "n": ns[-1]}, "ratio>=", tol["thm4.ratio_min"], float(top),
          float(top) >= tol["thm4.ratio_min"])
    mono = all(a <= b for a, b in zip(ratios, ratios[1:]))
    s.add({"k": k, "ns": list(ns)}, "nondecreasing", "true", mono, mono)
    return s


def suite_thm6(n: int = 20, m: int = 3, l: int = 3, evens=(8, 10, 12)) -> VerifySuite:
    """theta-(n, C_m, l): girth 2l, free of each checked C_{2k}, and t^m copies of C_{ml}."""
    s = VerifySuite("thm6")
    g = theta_of_graph(n, cycle_graph(m), l)
    t = theta_multiplicity(n, cycle_graph(m), l)
    short = ForbiddenSet.up_to(2 * l - 1)
    chk = is_free(g, short)
    s.add({"n": n, "m": m, "l": l}, "free", str(short), chk.free, chk.free)
    for two_k in evens:
        if two_k == m * l or two_k <= 2 * l:
            continue
        chk = is_free(g, {two_k})
        s.add({"n": n, "m": m, "l": l, "2k": two_k}, "free", f"C_{two_k}", chk.free, chk.free)
    counted = count_cycles(g, m * l).count
    s.add({"n": n, "m": m, "l": l, "t": t}, ">=", t ** m, counted, counted >= t ** m)
    return s


def suite_thm7(l: int = 3, ns=(24,), tol=DEFAULT_TOLERANCES) -> VerifySuite:
    """C_{2l} in K_{n/2,n/2} against closed form and against (1/2l)(n^2/4)^l."""
    s = VerifySuite("thm7")
    for n in ns:
        h = n // 2
        g = complete_bipartite(h, n - h)
        counted = count_cycles(g, 2 * l).count
        closed = closed_form_bipartite_cycles(h, n - h, l)
        s.add({"l": l, "n": n}, "=", closed, counted, counted == closed)
        ratio = Fraction(counted * 2 * l * 4 ** l, n ** (2 * l))
        s.add({"l": l, "n": n}, "ratio>=", tol["thm7.ratio_min"], float(ratio),
              float(ratio) >= tol["thm7.ratio_min"])
    return s


def suite_thm9(n: int = 25, l: int = 2, k: int = 3, m: int = 10, seeds=(1, 2, 3)) -> VerifySuite:
    """Hyperedges of a girth >= 2k+1 hypergraph turned into C_{2l+1}'s."""
    s = VerifySuite("thm9")
    c, g = 2 * l + 1, 2 * k + 1
    for seed in seeds:
        p = {"n": n, "l": l, "k": k, "seed": seed}
        h = random_greedy_hypergraph(n, c, g, m, seed)
        certified = hypergraph_girth(h, g - 1) is None
        s.add(p, ">=", f"girth {g}", "certified" if certified else "violated", certified,
              f"{h.m} hyperedges")
        graph = hyperedge_cycle_expansion(h, c)
        spec = cycle_spectrum(graph, 2 * k).lengths()
        ok = spec == ({c} if h.m else set())
        s.add(p, "=", "{%d}" % c, sorted(spec), ok, "cycle lengths up to 2k")
    return s


def suite_lemma51(k: int = 2, trials: int = 10_000, seed: int = 0, tol=DEFAULT_TOLERANCES) -> VerifySuite:
    s = VerifySuite("lemma51")
    g = complete_bipartite(2 * k, 2 * k)
    est = estimate_retention(g, 2 * k, BIPARTITION, trials=trials, seed=seed)
    target = float(retention_floor(BIPARTITION, 2 * k))
    hw = tol["lemma51.halfwidth"]
    s.add({"k": k, "trials": trials, "seed": seed}, "within", f"{target}+-{hw}", est.mean,
          abs(est.mean - target) <= hw, f"stderr {est.stderr:.2e}")
    exact = exact_cycle_retention(2 * k, BIPARTITION)
    s.add({"k": k}, "=", retention_floor(BIPARTITION, 2 * k), exact, exact == retention_floor(BIPARTITION, 2 * k),
          "all colourings of one cycle")
    return s


def suite_lemma52(k: int = 2, trials: int = 100_000, seed: int = 0, tol=DEFAULT_TOLERANCES) -> VerifySuite:
    s = VerifySuite("lemma52")
    c = 2 * k + 1
    g = complete_graph(c)
    est = estimate_retention(g, c, CYCLIC, classes=c, trials=trials, seed=seed)
    floor = retention_floor(CYCLIC, c)
    lo = float(floor) - tol["lemma52.sigmas"] * est.stderr
    s.add({"k": k, "trials": trials, "seed": seed}, ">=", floor, est.mean, est.mean >= lo,
          f"stderr {est.stderr:.2e}")
    exact = exact_cycle_retention(c, CYCLIC, c)
    s.add({"k": k}, ">=", floor, exact, exact >= floor, "exact per-cycle probability")
    return s


def suite_thm18(graphs: int = 50, max_n: int = 30, ls=range(2, 7), seed: int = 0,
                tol=DEFAULT_TOLERANCES) -> VerifySuite:
    s = VerifySuite("thm18")
    for i in range(graphs):
        n = 5 + (i * 7) % (max_n - 4)
        p = 0.1 + 0.2 * ((i * 13) % 10) / 10
        g = random_graph(n, p, seed + i)
        for l in ls:
            rep = walk_chain_check(g, l, eps=tol["walk.eps"], tol=tol["spectral.tol"])
            s.add({"graph": i, "n": n, "l": l}, "<=", f"mu^{l - 1}(1+eps)",
                  f"{rep.path_lhs}<= {rep.walk_ratio}", rep.chain_holds)
    return s


def suite_thm23(graphs: int = 20, seed: int = 0) -> VerifySuite:
    s = VerifySuite("thm23")
    g = complete_bipartite(10, 10)
    rep = path_upper_bound_check(g, 3, "odd", 2)
    s.add({"graph": "K_{10,10}", "l": 3}, "<=", rep.bound, rep.count, rep.holds and rep.count == 900)
    for i in range(graphs):
        a = 3 + i % 6
        b = 3 + (i * 5) % 7
        g = random_bipartite_graph(a, b, 0.5, seed + i)
        for l in (3, 4):
            rep = path_upper_bound_check(g, l, "odd", 2)
            s.add({"graph": i, "n": g.n, "l": l}, "<=", rep.bound, rep.count,
                  rep.holds and rep.asserted)
    return s


def suite_oddgirth(graph: Graph | None = None, l: int = 2, expected: int | None = 6) -> VerifySuite:
    s = VerifySuite("oddgirth-identity")
    g = graph if graph is not None else petersen_graph()
    for v in range(g.n):
        via, direct = odd_cycles_through_vertex(g, v, l)
        ok = via == direct and (expected is None or via == expected)
        s.add({"v": v, "l": l}, "=", direct, via, ok)
    total = count_cycles(g, 2 * l + 1).count
    through = sum(odd_cycles_through_vertex(g, v, l)[1] for v in range(g.n))
    s.add({"l": l}, "=", through, total * (2 * l + 1), through == total * (2 * l + 1),
          f"{total} cycles overall")
    return s


SUITES: dict[str, Callable[..., VerifySuite]] = {
    "thm3": suite_thm3,
    "thm4": suite_thm4,
    "thm6": suite_thm6,
    "thm7": suite_thm7,
    "thm9": suite_thm9,
    "lemma51": suite_lemma51,
    "lemma52": suite_lemma52,
    "thm18": suite_thm18,
    "thm23": suite_thm23,
    "oddgirth-identity": suite_oddgirth,
}


def run_suite(name: str, **params) -> VerifySuite:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'") from None
    return fn(**params)
