"""Maximization of the non-uniform Lagrangian over the standard simplex.

Multi-start projected gradient ascent with Armijo backtracking and a
sorting-based simplex projection.  The objective is smooth multilinear but
nonconvex, and the extremal witnesses tend to be low-support points, so the
start set mixes the uniform point, every vertex-concentrated point, and
seeded Dirichlet-style random points.  A brute-force grid oracle provides an
independent bound.

The iteration-budget-exhausted-without-a-feasible-iterate failure mode cannot
occur from a valid start (every iterate stays on the simplex by construction),
so maximize always returns a result for a nonempty hypergraph.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from ._backend import kernels
from .errors import InputError
from .hypergraph import Hypergraph, packed_incidence
from .lagrangian import (
    _FACTORIALS,
    as_weighting,
    eval_nonuniform,
    gradient,
    support,
)

EPS_SUPPORT = 1e-8  # support classification
EPS_VALUE = 1e-10  # acceptance slack in the support-minimization pass
ARMIJO = 1e-4


@dataclass(frozen=True)
class OptimizerConfig:
    restarts: int = 100
    seed: int = 0
    max_iters: int = 10_000
    tol: float = 1e-9
    threads: int = 1

    def __post_init__(self):
        if self.restarts < 1:
            raise InputError("restarts must be >= 1")
        if self.max_iters < 1:
            raise InputError("max_iters must be >= 1")
        if self.tol <= 0:
            raise InputError("tol must be positive")
        if self.threads < 1:
            raise InputError("threads must be >= 1")

    @classmethod
    def from_json(cls, blob) -> "OptimizerConfig":
        """Build settings from a JSON config block (string or parsed dict)."""
        data = json.loads(blob) if isinstance(blob, str) else dict(blob)
        unknown = set(data) - {f for f in cls.__dataclass_fields__}
        if unknown:
            raise InputError(f"unknown optimizer settings: {sorted(unknown)}")
        return cls(**data)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


@dataclass(frozen=True)
class OptimizationResult:
    value: float
    x: np.ndarray
    support: tuple[int, ...]
    kkt_residual: float
    cover_violations: tuple[tuple[int, int], ...]
    restarts_used: int


@dataclass(frozen=True)
class OracleResult:
    value: float
    x: np.ndarray
    grid_resolution: int
    lipschitz_bound: float
    gap_bound: float


def _packed(H: Hypergraph):
    verts, arity = packed_incidence(H)
    return verts, _FACTORIALS[arity]


def _starts(n: int, cfg: OptimizerConfig):
    """Deterministic start list: uniform, each vertex, then seeded random
    points (normalized exponentials, i.e. flat-Dirichlet samples)."""
    rng = np.random.default_rng(cfg.seed)
    out = [np.full(n, 1.0 / n)]
    for i in range(n):
        if len(out) == cfg.restarts:
            break
        e = np.zeros(n)
        e[i] = 1.0
        out.append(e)
    while len(out) < cfg.restarts:
        sample = rng.standard_exponential(n)
        total = sample.sum()
        if total <= 0.0:
            continue
        out.append(sample / total)
    return out[: cfg.restarts]


def maximize(H: Hypergraph, cfg: OptimizerConfig | None = None) -> OptimizationResult:
    """Best non-uniform Lagrangian value found by multi-start ascent.

    Deterministic for a fixed config (including across thread counts: results
    are reduced in start order, ties broken by the lexicographically smaller
    witness).  After the best start is selected, a support-minimization pass
    tries zeroing each support coordinate in ascending weight order and
    re-ascending, keeping any trial that loses at most EPS_VALUE; this chases
    minimal support heuristically, without certification.
    """
    if cfg is None:
        cfg = OptimizerConfig()
    if not H.R:
        raise InputError("hypergraph has no edges")
    verts, coeff = _packed(H)
    n = H.n

    def run(x0):
        return kernels.ascend(x0, verts, coeff, n, cfg.max_iters, cfg.tol, ARMIJO)

    starts = _starts(n, cfg)
    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            results = list(pool.map(run, starts))
    else:
        results = [run(x0) for x0 in starts]

    best_x, best_val = None, -np.inf
    for x, val, _, _ in results:
        if val > best_val or (val == best_val and tuple(x) < tuple(best_x)):
            best_x, best_val = x, val

    # support minimization: one pass over coordinates, smallest weight first
    order = sorted(range(n), key=lambda i: (best_x[i], i))
    for i in order:
        supp = np.nonzero(best_x > EPS_SUPPORT)[0]
        if len(supp) <= 1 or best_x[i] <= EPS_SUPPORT:
            continue
        trial = best_x.copy()
        trial[i] = 0.0
        total = trial.sum()
        if total <= 0.0:
            continue
        trial /= total
        tx, tval, _, _ = run(trial)
        if tval >= best_val - EPS_VALUE:
            best_x, best_val = tx, tval

    value = eval_nonuniform(H, best_x)
    residual, violations = check_optimality(H, best_x)
    return OptimizationResult(
        value=value,
        x=best_x,
        support=support(best_x, EPS_SUPPORT),
        kkt_residual=residual,
        cover_violations=violations,
        restarts_used=len(starts),
    )


def check_optimality(H: Hypergraph, x) -> tuple[float, tuple[tuple[int, int], ...]]:
    """First-order optimality diagnostics at a legal weighting.

    Returns the maximum deviation of the support partial derivatives from
    their mean (zero at an equal-partials point) and the support pairs that
    share no edge (each such pair witnesses a non-optimal support).
    """
    arr = as_weighting(x, H.n)
    g = gradient(H, arr)
    supp = support(arr, EPS_SUPPORT)
    if not supp:
        return 0.0, ()
    gs = g[[v - 1 for v in supp]]
    residual = float(np.max(np.abs(gs - gs.mean())))

    covered: set[tuple[int, int]] = set()
    supp_mask = 0
    for v in supp:
        supp_mask |= 1 << (v - 1)
    for r in H.R:
        if r < 2:
            continue
        for em in H.level_masks(r):
            inter = em & supp_mask
            if inter.bit_count() >= 2:
                labs = [v for v in supp if inter & (1 << (v - 1))]
                for a_i in range(len(labs)):
                    for b_i in range(a_i + 1, len(labs)):
                        covered.add((labs[a_i], labs[b_i]))
    violations = tuple(
        (a, b)
        for a_i, a in enumerate(supp)
        for b in supp[a_i + 1 :]
        if (a, b) not in covered
    )
    return residual, violations


def grid_oracle(H: Hypergraph, m: int, max_points: int = 10_000_000) -> OracleResult:
    """Exhaustive maximum over all weightings with entries k/m.

    The best grid value lies within lipschitz_bound/m of the true maximum:
    rounding an optimal weighting to the grid moves each coordinate by at most
    1/m, and the polynomial is Lipschitz in the max norm with constant at most
    sum over levels of r! * |E^r| * r (crude but computable).
    """
    if not H.R:
        raise InputError("hypergraph has no edges")
    if not isinstance(m, int) or m < 1:
        raise InputError(f"grid resolution must be a positive integer, got {m!r}")
    n = H.n
    count = math.comb(m + n - 1, n - 1)
    if count > max_points:
        raise InputError(
            f"grid enumeration needs {count} points, over the cap {max_points}"
        )
    verts, coeff = _packed(H)
    value, k = kernels.oracle_scan(verts, coeff, n, m)
    lipschitz = float(sum(math.factorial(r) * H.edge_count(r) * r for r in H.R))
    return OracleResult(
        value=float(value),
        x=np.asarray(k, dtype=np.float64) / m,
        grid_resolution=m,
        lipschitz_bound=lipschitz,
        gap_bound=lipschitz / m,
    )
