#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the four hot kernels on representative instances and prints a table
with per-call times and speedups.  The numba path includes a warm-up call so
JIT compilation is not measured.

    python3 benchmarks/bench_backends.py [--repeat 200]
"""

import argparse
import time

import numpy as np

from hyperlag import complete
from hyperlag._backend import get_kernels
from hyperlag.hypergraph import Hypergraph, packed_incidence
from hyperlag.lagrangian import _FACTORIALS


def _packed(H):
    verts, arity = packed_incidence(H)
    return verts, _FACTORIALS[arity]


def _instances():
    rng = np.random.default_rng(0)
    out = [
        ("K_10^{2}", complete(10, {2})),
        ("K_8^{1,2,3}", complete(8, {1, 2, 3})),
    ]
    # random {1,3}-graph on 12 vertices
    import itertools

    edges = [(v,) for v in range(1, 13)]
    edges += [e for e in itertools.combinations(range(1, 13), 3) if rng.random() < 0.4]
    out.append(("random {1,3} n=12", Hypergraph(12, edges)))
    return out


def _time(fn, repeat):
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        for _ in range(repeat):
            fn()
        best = min(best, (time.perf_counter() - t0) / repeat)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=200)
    parser.add_argument("--oracle-m", type=int, default=12)
    args = parser.parse_args()

    backends = {name: get_kernels(name) for name in ("numpy", "numba")}

    print(f"{'instance':>20} {'kernel':>12} {'numpy':>12} {'numba':>12} {'speedup':>8}")
    for label, H in _instances():
        verts, coeff = _packed(H)
        n = H.n
        rng = np.random.default_rng(1)
        x = rng.standard_exponential(n)
        x /= x.sum()
        xext = np.concatenate([x, [1.0]])
        x0 = np.full(n, 1.0 / n)

        cases = {
            "eval": lambda k: k.eval_packed(xext, verts, coeff),
            "gradient": lambda k: k.grad_packed(xext, verts, coeff, n),
            "ascend": lambda k: k.ascend(x0, verts, coeff, n, 10_000, 1e-9, 1e-4),
            "oracle": lambda k: k.oracle_scan(verts, coeff, n, args.oracle_m),
        }
        for kernel_name, call in cases.items():
            times = {}
            for bname, mod in backends.items():
                call(mod)  # warm-up (JIT compile for numba)
                repeat = args.repeat if kernel_name in ("eval", "gradient") else max(3, args.repeat // 50)
                times[bname] = _time(lambda: call(mod), repeat)
            speedup = times["numpy"] / times["numba"]
            print(
                f"{label:>20} {kernel_name:>12} "
                f"{times['numpy'] * 1e6:>10.1f}us {times['numba'] * 1e6:>10.1f}us "
                f"{speedup:>7.1f}x"
            )


if __name__ == "__main__":
    main()
