"""Pure-numpy kernels: the fallback backend.

Every function here has a numba twin in ``_kernels_numba`` with the same
signature and the same algorithm; ``HYPERLAG_BACKEND`` picks between them.
``verts`` is the padded 0-based incidence matrix from
``hypergraph.packed_incidence`` and ``xext`` carries the weight vector with a
trailing 1.0 for the padding slot.
"""

from __future__ import annotations

from itertools import combinations, islice

import numpy as np


def eval_packed(xext: np.ndarray, verts: np.ndarray, coeff: np.ndarray) -> float:
    if verts.shape[0] == 0:
        return 0.0
    return float(np.dot(coeff, np.prod(xext[verts], axis=1)))


def grad_packed(xext: np.ndarray, verts: np.ndarray, coeff: np.ndarray, n: int) -> np.ndarray:
    g = np.zeros(n + 1)
    num_edges, width = verts.shape
    if num_edges == 0:
        return g[:n]
    P = xext[verts]
    pre = np.ones((num_edges, width))
    if width > 1:
        np.cumprod(P[:, :-1], axis=1, out=pre[:, 1:])
    suf = np.ones((num_edges, width))
    if width > 1:
        suf[:, :-1] = np.cumprod(P[:, ::-1], axis=1)[:, ::-1][:, 1:]
    np.add.at(g, verts, pre * suf * coeff[:, None])
    return g[:n]


def project_simplex(y: np.ndarray) -> np.ndarray:
    """Euclidean projection onto {x >= 0, sum x = 1} by the sorting method."""
    u = np.sort(y)[::-1]
    css = np.cumsum(u)
    j = np.arange(1, y.shape[0] + 1)
    rho = np.nonzero(u + (1.0 - css) / j > 0.0)[0][-1]
    theta = (css[rho] - 1.0) / (rho + 1.0)
    return np.maximum(y - theta, 0.0)


def ascend(
    x0: np.ndarray,
    verts: np.ndarray,
    coeff: np.ndarray,
    n: int,
    max_iters: int,
    tol: float,
    armijo: float,
) -> tuple[np.ndarray, float, float, int]:
    """Projected gradient ascent from x0 along the projection arc.

    Steps are x+ = P(x + a*g) with Armijo backtracking (halving); note that
    subtracting any multiple of the all-ones vector from g leaves the
    projected point unchanged, so this is exactly the tangent-space step
    followed by a simplex projection.  Stops when ||P(x + g) - x|| <= tol.
    """
    x = x0.astype(np.float64).copy()
    xext = np.empty(n + 1)
    xext[:n] = x
    xext[n] = 1.0
    f = eval_packed(xext, verts, coeff)
    alpha = 1.0
    pg = np.inf
    iters = 0
    for _ in range(max_iters):
        g = grad_packed(xext, verts, coeff, n)
        d = project_simplex(x + g) - x
        pg = float(np.sqrt(np.dot(d, d)))
        if pg <= tol:
            break
        a = alpha
        accepted = False
        xt = x
        ft = f
        for _ in range(60):
            xt = project_simplex(x + a * g)
            diff = xt - x
            gd = float(np.dot(g, diff))
            if gd > 0.0:
                xext[:n] = xt
                ft = eval_packed(xext, verts, coeff)
                if ft >= f + armijo * gd:
                    accepted = True
                    break
            a *= 0.5
        if not accepted:
            xext[:n] = x
            break
        x = xt
        f = ft
        xext[:n] = x
        alpha = min(a * 2.0, 1e6)
        iters += 1
    return x, f, pg, iters


def _composition_batches(n: int, m: int, batch: int = 8192):
    """Yield (batch, n) integer arrays covering all weak compositions of m
    into n parts, in ascending lexicographic order."""
    if n == 1:
        yield np.array([[m]], dtype=np.int64)
        return
    slots = m + n - 1
    it = combinations(range(slots), n - 1)
    while True:
        block = list(islice(it, batch))
        if not block:
            return
        bars = np.array(block, dtype=np.int64)
        k = np.empty((bars.shape[0], n), dtype=np.int64)
        k[:, 0] = bars[:, 0]
        if n > 2:
            k[:, 1:-1] = bars[:, 1:] - bars[:, :-1] - 1
        k[:, -1] = slots - 1 - bars[:, -1]
        yield k


def oracle_scan(
    verts: np.ndarray, coeff: np.ndarray, n: int, m: int
) -> tuple[float, np.ndarray]:
    """Exhaustive maximum over the grid {k/m : k a composition of m}.

    Returns the best value and the lexicographically smallest maximizing
    composition (ascending enumeration keeps the first maximum).
    """
    best = -np.inf
    best_k = np.zeros(n, dtype=np.int64)
    for K in _composition_batches(n, m):
        X = np.empty((K.shape[0], n + 1))
        X[:, :n] = K / m
        X[:, n] = 1.0
        if verts.shape[0] == 0:
            vals = np.zeros(K.shape[0])
        else:
            vals = np.prod(X[:, verts], axis=2) @ coeff
        i = int(np.argmax(vals))
        if vals[i] > best:
            best = float(vals[i])
            best_k = K[i].copy()
    return best, best_k
