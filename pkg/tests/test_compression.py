"""Left-compression: single edges, edge sets, fixpoints, and monotonicity."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hyperlag import (
    InputError,
    OptimizerConfig,
    build,
    complete,
    compress_edge,
    compress_set,
    eval_nonuniform_exact,
    is_left_compressed,
    left_compress,
    maximize,
)

from conftest import random_hypergraph, random_rational_simplex


@st.composite
def graphs_and_pairs(draw):
    n = draw(st.integers(2, 6))
    pool = [
        e
        for r in range(1, min(3, n) + 1)
        for e in itertools.combinations(range(1, n + 1), r)
    ]
    edges = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=10, unique=True))
    i = draw(st.integers(1, n - 1))
    j = draw(st.integers(i + 1, n))
    return build(n, edges), i, j


class TestCompressEdge:
    def test_rewrites_when_applicable(self):
        assert compress_edge({2, 3}, 1, 2) == (1, 3)

    def test_noop_when_i_present(self):
        assert compress_edge({1, 2}, 1, 2) == (1, 2)

    def test_noop_when_j_absent(self):
        assert compress_edge({3, 4}, 1, 2) == (3, 4)

    def test_requires_i_less_than_j(self):
        with pytest.raises(InputError, match="i < j"):
            compress_edge({1, 2}, 2, 1)
        with pytest.raises(InputError):
            compress_edge({1, 2}, 2, 2)


class TestCompressSet:
    def test_simple_move(self):
        H = build(3, [(2, 3)])
        assert compress_set(H, 1, 2).edges(2) == ((1, 3),)

    def test_edge_survives_when_image_present(self):
        H = build(3, [(1, 3), (2, 3)])
        C = compress_set(H, 1, 2)
        assert C.edges(2) == ((1, 3), (2, 3))

    def test_singleton_edges_compress(self):
        H = build(2, [(2,)])
        assert compress_set(H, 1, 2).edges(1) == ((1,),)

    def test_rejects_bad_pair(self):
        H = build(3, [(1, 2)])
        with pytest.raises(InputError):
            compress_set(H, 3, 2)
        with pytest.raises(InputError):
            compress_set(H, 1, 5)

    @given(graphs_and_pairs())
    @settings(max_examples=60, deadline=None)
    def test_edge_counts_preserved(self, case):
        H, i, j = case
        C = compress_set(H, i, j)
        assert {r: C.edge_count(r) for r in C.R} == {r: H.edge_count(r) for r in H.R}

    @given(graphs_and_pairs(), st.integers(0, 2**31 - 1))
    @settings(max_examples=60, deadline=None)
    def test_monotone_for_sorted_weights(self, case, seed):
        H, i, j = case
        rng = np.random.default_rng(seed)
        x = sorted(random_rational_simplex(rng, H.n), reverse=True)
        assert eval_nonuniform_exact(compress_set(H, i, j), x) >= eval_nonuniform_exact(H, x)


class TestLeftCompress:
    def test_complete_graph_is_fixed(self):
        H = complete(5, {1, 3})
        C, trace = left_compress(H)
        assert C == H
        assert trace.steps == ()

    def test_single_pair_edge(self):
        H = build(3, [(2, 3)])
        C, trace = left_compress(H)
        assert C.edges(2) == ((1, 2),)
        assert is_left_compressed(C)
        assert len(trace.steps) > 0

    def test_single_triple_edge(self):
        H = build(4, [(2, 3, 4)])
        C, _ = left_compress(H)
        assert C.edges(3) == ((1, 2, 3),)

    def test_trace_bookkeeping(self):
        H = build(4, [(3,), (2, 4), (2, 3, 4)])
        C, trace = left_compress(H)
        assert dict(trace.initial_edge_counts) == {1: 1, 2: 1, 3: 1}
        assert dict(trace.final_edge_counts) == {1: 1, 2: 1, 3: 1}
        assert trace.sweeps >= 1
        assert is_left_compressed(C)
        # every step names a valid pair
        for i, j, moved in trace.steps:
            assert 1 <= i < j <= 4 and moved >= 1

    def test_termination_bound(self):
        rng = np.random.default_rng(51)
        for _ in range(30):
            H = random_hypergraph(rng, n_max=7)
            label_sum = sum(sum(e) for e in H.all_edges())
            _, trace = left_compress(H)
            assert trace.sweeps <= H.n * H.n * max(1, label_sum)

    def test_fixpoint_property(self):
        rng = np.random.default_rng(52)
        for _ in range(40):
            H = random_hypergraph(rng, n_max=7)
            C, _ = left_compress(H)
            assert is_left_compressed(C)
            for r in H.R:
                assert C.edge_count(r) == H.edge_count(r)

    def test_optimum_never_drops(self):
        rng = np.random.default_rng(53)
        cfg = OptimizerConfig(restarts=25, seed=0)
        for _ in range(8):
            H = random_hypergraph(rng, n_max=6)
            C, _ = left_compress(H)
            assert maximize(C, cfg).value >= maximize(H, cfg).value - 1e-7


class TestIsLeftCompressed:
    def test_complete_true(self):
        assert is_left_compressed(complete(4, {1, 2, 3}))

    def test_shifted_edge_false(self):
        assert not is_left_compressed(build(3, [(2, 3)]))

    def test_matches_definition(self):
        rng = np.random.default_rng(54)
        for _ in range(30):
            H = random_hypergraph(rng, n_max=6)
            by_definition = all(
                compress_set(H, i, j) == H
                for i in range(1, H.n)
                for j in range(i + 1, H.n + 1)
            )
            assert is_left_compressed(H) == by_definition
