"""Uniform and non-uniform Lagrangian polynomials of a hypergraph.

For a single-level (r-uniform) hypergraph G the uniform form is
``lambda(G, x) = sum over edges of the product of their vertex weights``.
The non-uniform form weights each level by r-factorial:
``lambda'(H, x) = sum over r of r! * lambda(H^r, x)``; for r = 1 the
contribution is just the summed weight of the singleton-edge vertices.

Floating evaluation runs on the selected kernel backend in a fixed canonical
edge order (levels ascending, edges sorted) for reproducibility.  An
exact-rational mode backs the strict-inequality certifications.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from ._backend import kernels
from .errors import InputError, ParseError
from .hypergraph import MAX_ARITY, Hypergraph, packed_incidence

EPS_FEASIBLE = 1e-12  # simplex tolerance for internally produced weightings
EPS_RENORM = 1e-6  # user-supplied weightings further off than this are rejected

_FACTORIALS = np.array([math.factorial(r) for r in range(MAX_ARITY + 1)], dtype=np.float64)


def _as_vector(x, n: int) -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64)
    if arr.shape != (n,):
        raise InputError(f"weight vector has shape {arr.shape}, expected ({n},)")
    return arr


def _xext(arr: np.ndarray) -> np.ndarray:
    out = np.empty(arr.shape[0] + 1)
    out[:-1] = arr
    out[-1] = 1.0
    return out


def as_weighting(x, n: int, trusted: bool = False) -> np.ndarray:
    """Validate a legal weighting (non-negative, summing to 1).

    Internally produced vectors must already sum to 1 within 1e-12.
    User-supplied vectors are renormalized when off by at most 1e-6 and
    rejected otherwise, tolerating I/O rounding but refusing garbage.
    """
    arr = _as_vector(x, n)
    if np.any(arr < 0.0):
        raise InputError("weighting has negative entries")
    s = float(arr.sum())
    if trusted:
        if abs(s - 1.0) > EPS_FEASIBLE:
            raise InputError(f"internal weighting sums to {s!r}, expected 1 within {EPS_FEASIBLE}")
        return arr
    if abs(s - 1.0) > EPS_RENORM:
        raise InputError(f"weighting sums to {s!r}; at most {EPS_RENORM} away from 1 is accepted")
    return arr / s


def support(x, eps: float = 1e-8) -> tuple[int, ...]:
    """1-based labels of the coordinates above eps."""
    arr = np.asarray(x, dtype=np.float64)
    return tuple(int(i) + 1 for i in np.nonzero(arr > eps)[0])


def _coeff_weighted(arity: np.ndarray) -> np.ndarray:
    return _FACTORIALS[arity]


def eval_nonuniform(H: Hypergraph, x) -> float:
    """The r!-weighted edge-product polynomial at x (any real vector)."""
    arr = _as_vector(x, H.n)
    verts, arity = packed_incidence(H)
    return kernels.eval_packed(_xext(arr), verts, _coeff_weighted(arity))


def eval_uniform(G: Hypergraph, x) -> float:
    """The plain edge-product polynomial; G must have exactly one level."""
    if len(G.R) != 1:
        raise InputError(f"uniform evaluation needs a single-level hypergraph, got levels {sorted(G.R)}")
    arr = _as_vector(x, G.n)
    verts, arity = packed_incidence(G)
    return kernels.eval_packed(_xext(arr), verts, np.ones(len(arity)))


def gradient(H: Hypergraph, x) -> np.ndarray:
    """Exact partial derivatives of eval_nonuniform with respect to each weight."""
    arr = _as_vector(x, H.n)
    verts, arity = packed_incidence(H)
    return kernels.grad_packed(_xext(arr), verts, _coeff_weighted(arity), H.n)


# -- exact-rational evaluation ----------------------------------------------


def _as_fractions(x, n: int) -> list[Fraction]:
    xs = [v if isinstance(v, Fraction) else Fraction(v) for v in x]
    if len(xs) != n:
        raise InputError(f"weight vector has length {len(xs)}, expected {n}")
    return xs


def eval_nonuniform_exact(H: Hypergraph, x) -> Fraction:
    """Exact-rational eval_nonuniform; accepts Fractions, ints, or strings."""
    xs = _as_fractions(x, H.n)
    total = Fraction(0)
    for r in sorted(H.R):
        c = math.factorial(r)
        for e in H.edges(r):
            p = Fraction(c)
            for v in e:
                p *= xs[v - 1]
            total += p
    return total


def eval_uniform_exact(G: Hypergraph, x) -> Fraction:
    """Exact-rational eval_uniform for a single-level hypergraph."""
    if len(G.R) != 1:
        raise InputError(f"uniform evaluation needs a single-level hypergraph, got levels {sorted(G.R)}")
    xs = _as_fractions(x, G.n)
    total = Fraction(0)
    for e in G.all_edges():
        p = Fraction(1)
        for v in e:
            p *= xs[v - 1]
        total += p
    return total


# -- closed forms and thresholds ----------------------------------------------


def closed_form_exact(t: int, R: Iterable[int]) -> Fraction:
    """lambda'(K_t^R) as an exact rational: sum of r! * C(t,r) / t^r.

    The uniform weighting x_i = 1/t on [t] attains the maximum, so each level
    contributes its falling factorial over t^r.
    """
    Rs = sorted(set(R))
    if not isinstance(t, int) or t < 1:
        raise InputError(f"t must be a positive integer, got {t!r}")
    total = Fraction(0)
    for r in Rs:
        if not isinstance(r, int) or r < 1:
            raise InputError(f"cardinality must be a positive integer, got {r!r}")
        if r > t:
            raise InputError(f"cardinality {r} exceeds t={t}")
        total += Fraction(math.factorial(r) * math.comb(t, r), t**r)
    return total


def closed_form(t: int, R: Iterable[int]) -> float:
    return float(closed_form_exact(t, R))


def threshold(r: int) -> int:
    """ceil((r(r-1) - 1)^(r-2) / (r(r-1))^(r-3)) in exact integer arithmetic."""
    if not isinstance(r, int) or r < 3:
        raise InputError(f"threshold is defined for integer r >= 3, got {r!r}")
    num = (r * (r - 1) - 1) ** (r - 2)
    den = (r * (r - 1)) ** (r - 3)
    return -(-num // den)


# -- weighting files -----------------------------------------------------------


def weighting_from_text(text: str) -> list[float]:
    """Parse the one-real-per-line weighting format (# comments allowed)."""
    values: list[float] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values.append(float(line))
        except ValueError:
            raise ParseError(f"{line!r} is not a number", lineno) from None
    if not values:
        raise ParseError("weighting file holds no numbers")
    return values


def load_weighting(path, n: int) -> np.ndarray:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read weighting file {path}: {exc.strerror}") from None
    if text.lstrip()[:1] == "[":
        try:
            values = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}", exc.lineno) from None
        if not isinstance(values, list) or not all(isinstance(v, (int, float)) for v in values):
            raise ParseError("weighting JSON must be an array of numbers")
    else:
        values = weighting_from_text(text)
    if len(values) != n:
        raise InputError(f"weighting has length {len(values)}, expected {n}")
    return as_weighting(values, n)
