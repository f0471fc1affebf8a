"""Shared helpers: seeded random instances and kernel-independent references."""

import itertools
import math
from fractions import Fraction

import numpy as np

from hyperlag import Hypergraph


def random_hypergraph(rng, n_min=2, n_max=8, R_pool=(1, 2, 3, 4)):
    """A random non-empty hypergraph with levels drawn from R_pool."""
    n = int(rng.integers(n_min, n_max + 1))
    pool = [r for r in R_pool if r <= n]
    k = int(rng.integers(1, len(pool) + 1))
    rs = sorted(int(r) for r in rng.choice(pool, size=k, replace=False))
    edges = []
    for r in rs:
        prob = float(rng.uniform(0.2, 0.7))
        for e in itertools.combinations(range(1, n + 1), r):
            if rng.random() < prob:
                edges.append(e)
    if not edges:
        edges = [tuple(range(1, rs[0] + 1))]
    return Hypergraph(n, edges)


def ref_eval(H, x):
    """Reference weighted evaluation, independent of the kernel backends."""
    total = 0.0
    for r in sorted(H.R):
        c = math.factorial(r)
        for e in H.edges(r):
            p = float(c)
            for v in e:
                p *= x[v - 1]
            total += p
    return total


def ref_gradient(H, x):
    """Reference gradient by leave-one-out products, independent of kernels."""
    n = H.n
    g = [0.0] * n
    for r in sorted(H.R):
        c = math.factorial(r)
        for e in H.edges(r):
            for v in e:
                p = float(c)
                for u in e:
                    if u != v:
                        p *= x[u - 1]
                g[v - 1] += p
    return np.array(g)


def random_simplex_point(rng, n):
    w = rng.standard_exponential(n)
    return w / w.sum()


def random_rational_simplex(rng, n, denom=60):
    """A random grid point of the simplex as exact Fractions summing to 1."""
    cuts = sorted(int(c) for c in rng.integers(0, denom + 1, size=n - 1)) if n > 1 else []
    parts = []
    prev = 0
    for c in cuts + [denom]:
        parts.append(c - prev)
        prev = c
    return [Fraction(k, denom) for k in parts]


def exhaustive_complete_order(H, Rq):
    """Largest complete set for the query by full subset enumeration (n <= ~12)."""
    Rq = set(Rq)
    best = 0
    masks = {r: H.level_masks(r) for r in Rq}

    def mask_of(sub):
        m = 0
        for v in sub:
            m |= 1 << (v - 1)
        return m

    for size in range(H.n, 0, -1):
        for S in itertools.combinations(range(1, H.n + 1), size):
            ok = True
            for r in Rq:
                if r > size:
                    continue
                for sub in itertools.combinations(S, r):
                    if mask_of(sub) not in masks[r]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return size
    return best
