"""Numba-compiled kernels: the default backend.

Twin of ``_kernels_numpy`` (same signatures, same algorithms, explicit loops).
Compiled lazily on first use; results are cached on disk.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def eval_packed(xext, verts, coeff):
    total = 0.0
    for e in range(verts.shape[0]):
        p = coeff[e]
        for q in range(verts.shape[1]):
            p *= xext[verts[e, q]]
        total += p
    return total


@njit(cache=True, nogil=True)
def grad_packed(xext, verts, coeff, n):
    g = np.zeros(n + 1)
    num_edges, width = verts.shape
    pre = np.empty(width + 1)
    suf = np.empty(width + 1)
    for e in range(num_edges):
        pre[0] = 1.0
        for q in range(width):
            pre[q + 1] = pre[q] * xext[verts[e, q]]
        suf[width] = 1.0
        for q in range(width - 1, -1, -1):
            suf[q] = suf[q + 1] * xext[verts[e, q]]
        for q in range(width):
            g[verts[e, q]] += coeff[e] * pre[q] * suf[q + 1]
    return g[:n]


@njit(cache=True, nogil=True)
def project_simplex(y):
    n = y.shape[0]
    u = np.sort(y)[::-1]
    css = np.cumsum(u)
    rho = 0
    for j in range(n):
        if u[j] + (1.0 - css[j]) / (j + 1.0) > 0.0:
            rho = j
    theta = (css[rho] - 1.0) / (rho + 1.0)
    out = np.empty(n)
    for i in range(n):
        v = y[i] - theta
        out[i] = v if v > 0.0 else 0.0
    return out


@njit(cache=True, nogil=True)
def ascend(x0, verts, coeff, n, max_iters, tol, armijo):
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
        pg = np.sqrt(np.dot(d, d))
        if pg <= tol:
            break
        a = alpha
        accepted = False
        xt = x
        ft = f
        for _ in range(60):
            xt = project_simplex(x + a * g)
            diff = xt - x
            gd = np.dot(g, diff)
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


@njit(cache=True, nogil=True)
def oracle_scan(verts, coeff, n, m):
    """Exhaustive maximum over the grid {k/m}; compositions are walked in
    descending lexicographic order, so replacing on ties keeps the
    lexicographically smallest maximizer."""
    k = np.zeros(n, dtype=np.int64)
    k[0] = m
    best_k = k.copy()
    xext = np.empty(n + 1)
    xext[n] = 1.0
    best = -np.inf
    while True:
        for i in range(n):
            xext[i] = k[i] / m
        v = eval_packed(xext, verts, coeff)
        if v > best:
            best = v
            best_k[:] = k
        elif v == best:
            best_k[:] = k
        if k[n - 1] == m:
            break
        t = k[n - 1]
        j = n - 2
        while k[j] == 0:
            j -= 1
        k[n - 1] = 0
        k[j] -= 1
        k[j + 1] = t + 1
    return best, best_k
