"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines as they complete.
"""

import itertools
import math
from fractions import Fraction

import numpy as np

from hyperlag import (
    OptimizerConfig,
    build,
    build_counterexample,
    complete,
    compress_set,
    edge_count,
    eval_nonuniform_exact,
    gradient,
    grid_oracle,
    is_left_compressed,
    left_compress,
    maximize,
    random_instance,
    threshold,
    verify,
)
from hyperlag.lagrangian import eval_nonuniform

from conftest import random_hypergraph, random_rational_simplex

CFG = OptimizerConfig()  # restarts=100, seed=0, max_iters=10000, tol=1e-9


def _report(name, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] {name}"
    if detail:
        line += f" -- {detail}"
    print(line)
    assert ok, line


def test_criterion_1_closed_form_reproduction():
    cases = (
        [(t, frozenset({2})) for t in range(2, 11)]
        + [(t, frozenset({1, 2})) for t in range(2, 11)]
        + [(t, frozenset({1, 3})) for t in range(5, 9)]
        + [(8, frozenset({1, 2, 3})), (9, frozenset({1, 2, 3}))]
    )
    worst = 0.0
    for t, R in cases:
        res = maximize(complete(t, R), CFG)
        if R == frozenset({2}):
            got = res.value / 2.0
            want = 0.5 * (1.0 - 1.0 / t)
        elif R == frozenset({1, 2}):
            got, want = res.value, 2.0 - 1.0 / t
        elif R == frozenset({1, 3}):
            got, want = res.value, 1.0 + (t - 1) * (t - 2) / t**2
        else:
            got, want = res.value, 1.0 + (t - 1) / t + (t - 1) * (t - 2) / t**2
        worst = max(worst, abs(got - want))
        assert abs(got - want) <= 1e-7, (t, sorted(R), got, want)
    _report("criterion 1: closed-form reproduction", True, f"{len(cases)} cases, worst |err| = {worst:.2e}")


def test_criterion_2_motzkin_straus_random_2graphs():
    rng = np.random.default_rng(20240202)
    worst = 0.0
    for _ in range(200):
        n = int(rng.integers(2, 11))
        p = float(rng.uniform(0.2, 0.9))
        edges = [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < p]
        if not edges:
            edges = [(1, 2)] if n >= 2 else []
        H = build(n, edges)
        # exhaustive clique search, independent of the library's solver
        masks = H.level_masks(2)
        omega = 1
        for size in range(n, 1, -1):
            found = False
            for S in itertools.combinations(range(1, n + 1), size):
                if all(
                    (1 << (a - 1)) | (1 << (b - 1)) in masks
                    for a, b in itertools.combinations(S, 2)
                ):
                    found = True
                    break
            if found:
                omega = size
                break
        got = maximize(H, CFG).value / 2.0
        want = 0.5 * (1.0 - 1.0 / omega)
        worst = max(worst, abs(got - want))
        assert abs(got - want) <= 1e-6, (n, omega, got, want)
    _report("criterion 2: Motzkin-Straus on 200 random 2-graphs", True, f"worst |err| = {worst:.2e}")


def test_criterion_3_theorem_instances():
    per_theorem = 20
    for theorem_id in ("motzkin_straus", "peng_3graph", "peng_12", "onr", "on13", "on123"):
        rng = np.random.default_rng(hash(theorem_id) % 2**32)
        for k in range(per_theorem):
            H = random_instance(theorem_id, rng)
            report = verify(theorem_id, H, CFG, tolerance=1e-5)
            assert report.verdict == "verified", (theorem_id, k, report)
    _report("criterion 3: theorem-instance verification", True, f"{per_theorem} verified instances x 6 theorems")


def test_criterion_4_counterexample_strictness():
    r = build_counterexample("ce_t3", s=4)
    assert r.lhs == Fraction(1222552224, 10**9) == Fraction(38204757, 31250000)
    assert r.rhs == Fraction(11, 9) and r.lhs > r.rhs and r.strict

    r = build_counterexample("ce_t4", s=5)
    assert r.rhs == Fraction(11, 8) and r.lhs > Fraction(11, 8) and r.strict

    r = build_counterexample("ce_edgebound", t=5, s=6)
    assert r.lhs - r.rhs == Fraction(3, 250) and r.strict
    assert edge_count(r.graph, 3) == math.comb(6, 3) + math.comb(4, 2) + 1

    r = build_counterexample("ce_peng2", t=5)
    assert r.lhs == Fraction(41, 500) and r.rhs == Fraction(2, 25) and r.strict
    _report("criterion 4: counterexample strictness (exact rationals)", True)


def test_criterion_5_compression_properties():
    rng = np.random.default_rng(5050)
    for _ in range(500):
        H = random_hypergraph(rng, n_max=8, R_pool=(1, 2, 3, 4))
        n = H.n
        x = sorted(random_rational_simplex(rng, n), reverse=True)
        base = eval_nonuniform_exact(H, x)
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                C = compress_set(H, i, j)
                # exact comparison: no float tolerance needed
                assert eval_nonuniform_exact(C, x) >= base
                for r in H.R:
                    assert C.edge_count(r) == H.edge_count(r)
        fixed, _ = left_compress(H)
        assert is_left_compressed(fixed)
        for r in H.R:
            assert fixed.edge_count(r) == H.edge_count(r)
    _report("criterion 5: compression properties on 500 random hypergraphs", True)


def test_criterion_6_gradient_matches_finite_differences():
    rng = np.random.default_rng(606)
    h = 1e-6
    worst = 0.0
    for _ in range(100):
        H = random_hypergraph(rng, n_max=8)
        n = H.n
        w = rng.standard_exponential(n) + 0.5  # entries bounded away from 0
        x = w / w.sum()
        g = gradient(H, x)
        for i in range(n):
            xp = x.copy()
            xp[i] += h
            xm = x.copy()
            xm[i] -= h
            fd = (eval_nonuniform(H, xp) - eval_nonuniform(H, xm)) / (2 * h)
            rel = abs(fd - g[i]) / max(1.0, abs(g[i]))
            worst = max(worst, rel)
            assert rel <= 1e-5, (H, i, fd, g[i])
    _report("criterion 6: gradient vs central differences", True, f"worst rel err = {worst:.2e}")


def _small_corpus():
    graphs = [
        complete(2, {2}),
        complete(3, {2}),
        complete(4, {2}),
        complete(5, {2}),
        complete(2, {1, 2}),
        complete(4, {1, 2}),
        complete(5, {1, 2}),
        complete(3, {1, 3}),
        complete(4, {1, 3}),
        complete(5, {1, 3}),
        complete(4, {1, 2, 3}),
        complete(5, {1, 2, 3}),
        build(3, [(1, 2), (2, 3)]),  # path
        build(4, [(1, 2), (3, 4)]),  # disjoint edges
        build(1, [(1,)]),  # single 1-edge
        build_counterexample("ce_t3", s=4).graph,
        build(5, [(1,), (3,), (1, 2, 3), (2, 3, 4), (1, 4, 5)]),
    ]
    assert all(H.n <= 5 for H in graphs)
    return graphs


def test_criterion_7_oracle_consistency():
    worst_gap = 0.0
    for H in _small_corpus():
        res = maximize(H, CFG)
        oracle = grid_oracle(H, 50)
        assert res.value >= oracle.value - 1e-9, (H, res.value, oracle.value)
        gap = res.value - oracle.value
        worst_gap = max(worst_gap, gap)
        assert gap <= oracle.gap_bound, (H, gap, oracle.gap_bound)
    _report("criterion 7: oracle consistency on the n<=5 corpus", True, f"worst gap = {worst_gap:.2e}")


def test_criterion_8_threshold_formula():
    assert threshold(3) == 5
    assert threshold(4) == 11
    assert threshold(5) == 18
    # consistency with the {1,3} hypothesis floor
    assert threshold(3) == 5 and threshold(3) >= 5
    _report("criterion 8: threshold formula", True, "threshold(3,4,5) = 5, 11, 18")
