"""Clique-order closed forms: hypothesis checking and strict counterexamples.

Six identities are checkable, keyed by theorem id:

  motzkin_straus  2-graphs: uniform Lagrangian = (1/2)(1 - 1/t), t the clique order
  peng_3graph     3-graphs with edge count in the band [C(t,3), C(t,3)+C(t-1,2)]
                  and a clique of order t: uniform Lagrangian = C(t,3)/t^3
  peng_12         {1,2}-graphs with maximum complete {1,2}-subgraph order t >= 2:
                  weighted Lagrangian = 2 - 1/t
  onr             {1,r}-graphs (r >= 3) whose maximum complete {1,r}- and
                  {1}-subgraph orders agree at t >= threshold(r)
  on13            {1,3}-graphs with {1,3}-order t >= 5, 3-level clique order s >= t,
                  and 3-level edge count within [C(s,3), C(s,3)+C(t-1,2)]
  on123           {1,2,3}-graphs whose {1,2,3}- and {1}-orders agree at t >= 8

The uniform-scale identities (motzkin_straus, peng_3graph) are reported in
plain-lambda form; the rest in the r!-weighted form.  Counterexample
constructions certify strict inequalities in exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import InputError
from .hypergraph import Hypergraph, max_complete_subgraph_order
from .lagrangian import (
    closed_form,
    closed_form_exact,
    eval_nonuniform_exact,
    eval_uniform_exact,
    threshold,
)
from .optimizer import OptimizerConfig, maximize

THEOREM_IDS = ("motzkin_straus", "peng_3graph", "peng_12", "onr", "on13", "on123")
CONSTRUCTION_IDS = ("ce_t3", "ce_t4", "ce_edgebound", "ce_peng2")

DEFAULT_TOLERANCE = 1e-5  # looser than solver tolerance, tighter than grid gaps

# theorems stated for uniform hypergraphs compare in plain-lambda scale
_UNIFORM_SCALE = {"motzkin_straus": 2.0, "peng_3graph": 6.0}


@dataclass(frozen=True)
class Hypothesis:
    name: str
    holds: bool
    detail: str


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    hypotheses: tuple[Hypothesis, ...]
    expected: float | None
    computed: float | None
    verdict: str  # verified | hypothesis_failed | mismatch
    tolerance: float

    def to_json_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "hypotheses": [
                {"name": h.name, "holds": h.holds, "detail": h.detail}
                for h in self.hypotheses
            ],
            "expected": self.expected,
            "computed": self.computed,
            "verdict": self.verdict,
            "tolerance": self.tolerance,
        }


@dataclass(frozen=True)
class CounterexampleReport:
    construction_id: str
    graph: Hypergraph
    x: tuple[Fraction, ...]
    lhs: Fraction
    rhs: Fraction
    strict: bool
    form: str  # "uniform" or "weighted"

    @property
    def margin(self) -> Fraction:
        return self.lhs - self.rhs

    def to_json_dict(self) -> dict:
        from .hypergraph import to_json_dict as graph_json

        return {
            "construction_id": self.construction_id,
            "graph": graph_json(self.graph),
            "x": [f"{w.numerator}/{w.denominator}" for w in self.x],
            "lhs": f"{self.lhs.numerator}/{self.lhs.denominator}",
            "rhs": f"{self.rhs.numerator}/{self.rhs.denominator}",
            "margin": f"{self.margin.numerator}/{self.margin.denominator}",
            "strict": self.strict,
            "form": self.form,
        }


@dataclass(frozen=True)
class CatalogEntry:
    theorem_id: str
    summary: str
    hypothesis_names: tuple[str, ...]
    formula: str


# -- hypothesis checkers -------------------------------------------------------


def _require_types(H: Hypergraph, R: frozenset[int], theorem_id: str) -> None:
    if H.R != R:
        raise InputError(
            f"{theorem_id} applies to {sorted(R)}-graphs, got edge types {sorted(H.R)}"
        )


def _band_t_for_3graph(m: int) -> int | None:
    """The unique t with C(t,3) <= m <= C(t,3) + C(t-1,2), if any (the bands
    for consecutive t are disjoint since C(t-1,2) < C(t,2))."""
    t = 3
    while math.comb(t, 3) <= m:
        if m <= math.comb(t, 3) + math.comb(t - 1, 2):
            return t
        t += 1
    return None


def _hyps_motzkin_straus(H: Hypergraph):
    _require_types(H, frozenset({2}), "motzkin_straus")
    t, _ = max_complete_subgraph_order(H, {2})
    hyps = [Hypothesis("largest_clique_order", t >= 1, f"largest clique has order t={t}")]
    return hyps, closed_form(t, {2}) / 2.0


def _hyps_peng_3graph(H: Hypergraph):
    _require_types(H, frozenset({3}), "peng_3graph")
    m = H.edge_count(3)
    t = _band_t_for_3graph(m)
    if t is None:
        t_fallback, _ = max_complete_subgraph_order(H, {3})
        hyps = [
            Hypothesis(
                "edge_count_band",
                False,
                f"no t has C(t,3) <= m={m} <= C(t,3)+C(t-1,2)",
            ),
            Hypothesis(
                "contains_clique_of_order_t",
                True,
                f"largest 3-level clique has order {t_fallback}",
            ),
        ]
        expected = (
            closed_form(t_fallback, {3}) / 6.0 if t_fallback >= 3 else 0.0
        )
        return hyps, expected
    omega, _ = max_complete_subgraph_order(H, {3})
    hyps = [
        Hypothesis(
            "edge_count_band",
            True,
            f"m={m} lies in [C({t},3), C({t},3)+C({t-1},2)] = "
            f"[{math.comb(t, 3)}, {math.comb(t, 3) + math.comb(t - 1, 2)}]",
        ),
        Hypothesis(
            "contains_clique_of_order_t",
            omega >= t,
            f"largest 3-level clique has order {omega}, need >= t={t}",
        ),
    ]
    return hyps, closed_form(t, {3}) / 6.0


def _hyps_peng_12(H: Hypergraph):
    _require_types(H, frozenset({1, 2}), "peng_12")
    t, _ = max_complete_subgraph_order(H, {1, 2})
    hyps = [
        Hypothesis(
            "complete_12_order_at_least_2",
            t >= 2,
            f"maximum complete {{1,2}}-subgraph has order t={t}",
        )
    ]
    expected = closed_form(t, {1, 2}) if t >= 2 else None
    return hyps, expected


def _hyps_onr(H: Hypergraph):
    higher = sorted(H.R - {1})
    if 1 not in H.R or len(higher) != 1 or higher[0] < 3:
        raise InputError(
            f"onr applies to {{1,r}}-graphs with r >= 3, got edge types {sorted(H.R)}"
        )
    r = higher[0]
    t_full, _ = max_complete_subgraph_order(H, {1, r})
    t_ones, _ = max_complete_subgraph_order(H, {1})
    thr = threshold(r)
    t = t_full
    hyps = [
        Hypothesis(
            "orders_equal",
            t_full == t_ones,
            f"complete {{1,{r}}}-order {t_full} vs complete {{1}}-order {t_ones}",
        ),
        Hypothesis(
            "t_at_least_threshold",
            t >= thr,
            f"t={t} vs threshold({r})={thr}",
        ),
    ]
    expected = closed_form(t, {1, r}) if r <= t else None
    return hyps, expected


def _hyps_on13(H: Hypergraph):
    _require_types(H, frozenset({1, 3}), "on13")
    t, _ = max_complete_subgraph_order(H, {1, 3})
    s, _ = max_complete_subgraph_order(H, {3})
    m = H.edge_count(3)
    lo = math.comb(s, 3)
    hi = lo + math.comb(t - 1, 2)
    hyps = [
        Hypothesis("t_at_least_5", t >= 5, f"maximum complete {{1,3}}-subgraph order t={t}"),
        Hypothesis("three_level_clique_at_least_t", s >= t, f"3-level clique order s={s}, t={t}"),
        Hypothesis("edge_count_band", lo <= m <= hi, f"e(H^3)={m} vs band [{lo}, {hi}]"),
    ]
    expected = closed_form(t, {1, 3}) if t >= 3 else None
    return hyps, expected


def _hyps_on123(H: Hypergraph):
    _require_types(H, frozenset({1, 2, 3}), "on123")
    t_full, _ = max_complete_subgraph_order(H, {1, 2, 3})
    t_ones, _ = max_complete_subgraph_order(H, {1})
    t = t_full
    hyps = [
        Hypothesis(
            "orders_equal",
            t_full == t_ones,
            f"complete {{1,2,3}}-order {t_full} vs complete {{1}}-order {t_ones}",
        ),
        Hypothesis("t_at_least_8", t >= 8, f"t={t}"),
    ]
    expected = closed_form(t, {1, 2, 3}) if t >= 3 else None
    return hyps, expected


_CHECKERS = {
    "motzkin_straus": _hyps_motzkin_straus,
    "peng_3graph": _hyps_peng_3graph,
    "peng_12": _hyps_peng_12,
    "onr": _hyps_onr,
    "on13": _hyps_on13,
    "on123": _hyps_on123,
}


def verify(
    theorem_id: str,
    H: Hypergraph,
    cfg: OptimizerConfig | None = None,
    force: bool = False,
    tolerance: float = DEFAULT_TOLERANCE,
) -> TheoremReport:
    """Check a theorem's hypotheses on H and compare the optimizer against the
    closed form.

    When a hypothesis fails the optimizer is skipped (verdict
    ``hypothesis_failed``) unless ``force`` is set, which still runs the
    maximization and reports the computed value under the failed verdict.
    """
    if theorem_id not in _CHECKERS:
        raise InputError(f"unknown theorem id {theorem_id!r}; expected one of {THEOREM_IDS}")
    hyps, expected = _CHECKERS[theorem_id](H)
    all_hold = all(h.holds for h in hyps)
    computed = None
    if all_hold or force:
        result = maximize(H, cfg)
        computed = result.value / _UNIFORM_SCALE.get(theorem_id, 1.0)
    if not all_hold:
        verdict = "hypothesis_failed"
    elif expected is not None and abs(expected - computed) <= tolerance:
        verdict = "verified"
    else:
        verdict = "mismatch"
    return TheoremReport(
        theorem_id=theorem_id,
        hypotheses=tuple(hyps),
        expected=expected,
        computed=computed,
        verdict=verdict,
        tolerance=tolerance,
    )


# -- counterexample constructions ----------------------------------------------


def _ce_t3(s: int = 4, n: int | None = None) -> CounterexampleReport:
    if s < 4:
        raise InputError(f"ce_t3 needs s >= 4, got {s}")
    if n is None:
        n = s
    if n < s:
        raise InputError(f"ce_t3 needs n >= s, got n={n}, s={s}")
    edges = [(v,) for v in (1, 2, 3)]
    edges += list(combinations(range(1, s + 1), 3))
    H = Hypergraph(n, edges)
    bulk = Fraction(1, 1000) / (s - 3)
    x = (
        [Fraction(333, 1000)] * 3
        + [bulk] * (s - 3)
        + [Fraction(0)] * (n - s)
    )
    lhs = eval_nonuniform_exact(H, x)
    rhs = closed_form_exact(3, {1, 3})
    return CounterexampleReport("ce_t3", H, tuple(x), lhs, rhs, lhs > rhs, "weighted")


def _ce_t4(s: int = 5, n: int | None = None) -> CounterexampleReport:
    if s < 5:
        raise InputError(f"ce_t4 needs s >= 5, got {s}")
    if n is None:
        n = s
    if n < s:
        raise InputError(f"ce_t4 needs n >= s, got n={n}, s={s}")
    edges = [(v,) for v in (1, 2, 3, 4)]
    edges += list(combinations(range(1, s + 1), 3))
    H = Hypergraph(n, edges)
    bulk = Fraction(8, 10000) / (s - 4)
    x = (
        [Fraction(2498, 10000)] * 4
        + [bulk] * (s - 4)
        + [Fraction(0)] * (n - s)
    )
    lhs = eval_nonuniform_exact(H, x)
    rhs = closed_form_exact(4, {1, 3})
    return CounterexampleReport("ce_t4", H, tuple(x), lhs, rhs, lhs > rhs, "weighted")


def _ce_edgebound(t: int = 5, s: int | None = None, n: int | None = None) -> CounterexampleReport:
    if t < 5:
        raise InputError(f"ce_edgebound needs t >= 5, got {t}")
    if s is None:
        s = t + 1
    if s < t + 1:
        raise InputError(f"ce_edgebound needs s >= t+1, got s={s}, t={t}")
    if n is None:
        n = s + 1
    if n < s + 1:
        raise InputError(f"ce_edgebound needs n >= s+1, got n={n}, s={s}")
    edges = [(v,) for v in range(1, t + 1)] + [(s + 1,)]
    edges += list(combinations(range(1, s + 1), 3))
    edges.append((1, t, s + 1))
    edges += [(a, b, s + 1) for a, b in combinations(range(1, t), 2)]
    H = Hypergraph(n, edges)
    x = [Fraction(1, t)] * (t - 1) + [Fraction(1, 2 * t)]
    x += [Fraction(0)] * (s - t)
    x.append(Fraction(1, 2 * t))
    x += [Fraction(0)] * (n - s - 1)
    lhs = eval_nonuniform_exact(H, x)
    rhs = closed_form_exact(t, {1, 3})
    return CounterexampleReport("ce_edgebound", H, tuple(x), lhs, rhs, lhs > rhs, "weighted")


def _ce_peng2(t: int = 5, n: int | None = None) -> CounterexampleReport:
    if t < 3:
        raise InputError(f"ce_peng2 needs t >= 3, got {t}")
    if n is None:
        n = t + 1
    if n < t + 1:
        raise InputError(f"ce_peng2 needs n >= t+1, got n={n}, t={t}")
    edges = list(combinations(range(1, t + 1), 3))
    edges += [(a, b, t + 1) for a, b in combinations(range(1, t), 2)]
    edges.append((1, t, t + 1))
    H = Hypergraph(n, edges)
    x = [Fraction(1, t)] * (t - 1) + [Fraction(1, 2 * t), Fraction(1, 2 * t)]
    x += [Fraction(0)] * (n - t - 1)
    lhs = eval_uniform_exact(H, x)
    rhs = Fraction(math.comb(t, 3), t**3)
    return CounterexampleReport("ce_peng2", H, tuple(x), lhs, rhs, lhs > rhs, "uniform")


_CONSTRUCTIONS = {
    "ce_t3": _ce_t3,
    "ce_t4": _ce_t4,
    "ce_edgebound": _ce_edgebound,
    "ce_peng2": _ce_peng2,
}


def build_counterexample(construction_id: str, **params) -> CounterexampleReport:
    """Build a published tightness instance and certify its strict inequality
    in exact rational arithmetic (decimal weights are taken literally, e.g.
    0.333 = 333/1000)."""
    if construction_id not in _CONSTRUCTIONS:
        raise InputError(
            f"unknown construction {construction_id!r}; expected one of {CONSTRUCTION_IDS}"
        )
    try:
        return _CONSTRUCTIONS[construction_id](**params)
    except TypeError as exc:
        raise InputError(f"bad parameters for {construction_id}: {exc}") from None


# -- catalog ---------------------------------------------------------------------


def catalog() -> list[CatalogEntry]:
    """Machine-readable index of the implemented identities."""
    return [
        CatalogEntry(
            "motzkin_straus",
            "2-graphs: the uniform Lagrangian is determined by the largest clique order",
            ("largest_clique_order",),
            "(1/2)(1 - 1/t)",
        ),
        CatalogEntry(
            "peng_3graph",
            "3-graphs with a t-clique and edge count within C(t,3)..C(t,3)+C(t-1,2)",
            ("edge_count_band", "contains_clique_of_order_t"),
            "C(t,3)/t^3",
        ),
        CatalogEntry(
            "peng_12",
            "{1,2}-graphs with maximum complete {1,2}-subgraph order t >= 2",
            ("complete_12_order_at_least_2",),
            "2 - 1/t",
        ),
        CatalogEntry(
            "onr",
            "{1,r}-graphs whose complete {1,r}- and {1}-orders agree at large t",
            ("orders_equal", "t_at_least_threshold"),
            "1 + prod_{i=1..r-1}(t-i)/t^(r-1), for t >= ceil([r(r-1)-1]^(r-2)/[r(r-1)]^(r-3))",
        ),
        CatalogEntry(
            "on13",
            "{1,3}-graphs with {1,3}-order t >= 5 and a 3-level clique of order s"
            " with the 3-level edge count within C(s,3)..C(s,3)+C(t-1,2)",
            ("t_at_least_5", "three_level_clique_at_least_t", "edge_count_band"),
            "1 + (t-1)(t-2)/t^2",
        ),
        CatalogEntry(
            "on123",
            "{1,2,3}-graphs whose complete {1,2,3}- and {1}-orders agree at t >= 8",
            ("orders_equal", "t_at_least_8"),
            "1 + (t-1)/t + (t-1)(t-2)/t^2",
        ),
    ]


# -- seeded instance generators ---------------------------------------------------


def _sample_extra_sets(rng, pool: list[tuple[int, ...]], k: int) -> list[tuple[int, ...]]:
    if k == 0 or not pool:
        return []
    idx = rng.choice(len(pool), size=min(k, len(pool)), replace=False)
    return [pool[i] for i in sorted(int(i) for i in idx)]


def random_instance(theorem_id: str, rng: np.random.Generator, n_max: int = 9) -> Hypergraph:
    """A random hypergraph satisfying every hypothesis of the theorem.

    The constructions guarantee the hypotheses combinatorially: singleton
    edges pin the complete-subgraph orders, and edge-count bands rule out
    larger cliques than intended.
    """
    if theorem_id == "motzkin_straus":
        n = int(rng.integers(3, min(n_max, 10) + 1))
        p = float(rng.uniform(0.25, 0.85))
        edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
        if not edges:
            edges = [(1, 2)]
        return Hypergraph(n, edges)

    if theorem_id == "peng_3graph":
        t = int(rng.integers(4, 7))
        n = int(rng.integers(t, n_max + 1))
        base = list(combinations(range(1, t + 1), 3))
        pool = [e for e in combinations(range(1, n + 1), 3) if e[-1] > t]
        k = int(rng.integers(0, math.comb(t - 1, 2) + 1))
        return Hypergraph(n, base + _sample_extra_sets(rng, pool, k))

    if theorem_id == "peng_12":
        n = int(rng.integers(3, n_max + 1))
        ones = {(1,), (2,)}
        for v in range(3, n + 1):
            if rng.random() < 0.5:
                ones.add((v,))
        twos = {(1, 2)}
        p = float(rng.uniform(0.3, 0.8))
        for e in combinations(range(1, n + 1), 2):
            if rng.random() < p:
                twos.add(e)
        return Hypergraph(n, sorted(ones) + sorted(twos))

    if theorem_id == "onr":
        t = int(rng.integers(5, 7))
        n = int(rng.integers(t, n_max + 1))
        edges = [(v,) for v in range(1, t + 1)]
        edges += list(combinations(range(1, t + 1), 3))
        pool = [e for e in combinations(range(1, n + 1), 3) if e[-1] > t]
        edges += [e for e in pool if rng.random() < 0.3]
        return Hypergraph(n, edges)

    if theorem_id == "on13":
        t = int(rng.integers(5, 7))
        s = t + int(rng.integers(0, 3))
        s = min(s, n_max)
        n = int(rng.integers(s, n_max + 1))
        edges = [(v,) for v in range(1, t + 1)]
        edges += list(combinations(range(1, s + 1), 3))
        pool = [e for e in combinations(range(1, n + 1), 3) if e[-1] > s]
        k = int(rng.integers(0, math.comb(t - 1, 2) + 1))
        edges += _sample_extra_sets(rng, pool, k)
        return Hypergraph(n, edges)

    if theorem_id == "on123":
        t = 8
        n = int(rng.integers(t, n_max + 1))
        edges = [(v,) for v in range(1, t + 1)]
        edges += list(combinations(range(1, t + 1), 2))
        edges += list(combinations(range(1, t + 1), 3))
        for r in (2, 3):
            pool = [e for e in combinations(range(1, n + 1), r) if e[-1] > t]
            edges += [e for e in pool if rng.random() < 0.4]
        return Hypergraph(n, edges)

    raise InputError(f"unknown theorem id {theorem_id!r}; expected one of {THEOREM_IDS}")
