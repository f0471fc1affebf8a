"""Non-uniform hypergraphs on labeled vertices 1..n.

Edges are stored per cardinality level as bitmasks over the vertex set,
which keeps subset and neighborhood queries cheap.  Instances are immutable
after construction, so every query here is a pure function and safe to call
concurrently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import InputError, ParseError

# Bitmask storage and the exact-factorial table downstream put hard ceilings
# on problem size; both are far beyond the intended desk scale.
MAX_VERTICES = 64
MAX_ARITY = 20


def mask_of(edge: Iterable[int]) -> int:
    m = 0
    for v in edge:
        m |= 1 << (v - 1)
    return m


def labels_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


class Hypergraph:
    """Immutable hypergraph with edges grouped by cardinality.

    ``levels`` maps each present cardinality r to the tuple of r-edges, each
    edge a strictly increasing tuple of 1-based labels.  Absent cardinalities
    are simply absent; no level is ever empty.
    """

    __slots__ = ("n", "_levels", "_mask_sets", "_packed")

    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        if not isinstance(n, int) or isinstance(n, bool):
            raise InputError(f"vertex count must be an integer, got {n!r}")
        if n < 1:
            raise InputError(f"vertex count must be >= 1, got {n}")
        if n > MAX_VERTICES:
            raise InputError(f"vertex count {n} exceeds the supported maximum {MAX_VERTICES}")
        self.n = n

        by_level: dict[int, list[tuple[int, ...]]] = {}
        seen: set[int] = set()
        for edge in edges:
            labels = tuple(sorted(edge))
            if len(labels) == 0:
                raise InputError("empty edge")
            if len(set(labels)) != len(labels):
                raise InputError(f"edge {labels} repeats a vertex label")
            if labels[0] < 1 or labels[-1] > n:
                raise InputError(f"edge {labels} has labels outside 1..{n}")
            if len(labels) > MAX_ARITY:
                raise InputError(f"edge cardinality {len(labels)} exceeds the supported maximum {MAX_ARITY}")
            m = mask_of(labels)
            if m in seen:
                raise InputError(f"duplicate edge {labels}")
            seen.add(m)
            by_level.setdefault(len(labels), []).append(labels)

        self._levels: dict[int, tuple[tuple[int, ...], ...]] = {
            r: tuple(sorted(es)) for r, es in sorted(by_level.items())
        }
        self._mask_sets: dict[int, frozenset[int]] = {
            r: frozenset(mask_of(e) for e in es) for r, es in self._levels.items()
        }
        self._packed = None

    # -- basic queries ----------------------------------------------------

    @property
    def levels(self) -> Mapping[int, tuple[tuple[int, ...], ...]]:
        return MappingProxyType(self._levels)

    @property
    def R(self) -> frozenset[int]:
        """The set of edge cardinalities present (the edge-type set)."""
        return frozenset(self._levels)

    def edges(self, r: int) -> tuple[tuple[int, ...], ...]:
        return self._levels.get(r, ())

    def all_edges(self) -> tuple[tuple[int, ...], ...]:
        return tuple(e for r in sorted(self._levels) for e in self._levels[r])

    def edge_count(self, r: int) -> int:
        return len(self._levels.get(r, ()))

    def has_edge(self, edge: Iterable[int]) -> bool:
        labels = tuple(sorted(edge))
        return mask_of(labels) in self._mask_sets.get(len(labels), frozenset())

    def level_masks(self, r: int) -> frozenset[int]:
        return self._mask_sets.get(r, frozenset())

    def degree(self, v: int, r: int) -> int:
        bit = 1 << (v - 1)
        return sum(1 for m in self._mask_sets.get(r, ()) if m & bit)

    # -- equality / hashing ------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.n == other.n
            and self._levels == other._levels
        )

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self._levels.items()))))

    def __repr__(self) -> str:
        rs = ",".join(str(r) for r in sorted(self._levels))
        total = sum(len(es) for es in self._levels.values())
        return f"Hypergraph(n={self.n}, R={{{rs}}}, edges={total})"


def build(n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate and construct a hypergraph; duplicate edges are rejected."""
    return Hypergraph(n, edges)


def complete(t: int, R: Iterable[int]) -> Hypergraph:
    """The complete hypergraph on [t] with one full level per r in R."""
    Rs = sorted(set(R))
    if not isinstance(t, int) or t < 1:
        raise InputError(f"vertex count must be a positive integer, got {t!r}")
    for r in Rs:
        if not isinstance(r, int) or r < 1:
            raise InputError(f"cardinality must be a positive integer, got {r!r}")
        if r > t:
            raise InputError(f"cardinality {r} exceeds vertex count {t}")
    edges = [c for r in Rs for c in combinations(range(1, t + 1), r)]
    return Hypergraph(t, edges)


# -- neighborhoods ---------------------------------------------------------


@dataclass(frozen=True)
class NeighborhoodSet:
    """A collection of fixed-size vertex sets completing a pivot to an edge."""

    arity: int
    sets: frozenset[tuple[int, ...]]

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(sorted(self.sets))

    def __contains__(self, item) -> bool:
        return tuple(sorted(item)) in self.sets


def _check_level_vertex(H: Hypergraph, r: int, *vertices: int) -> None:
    if r not in H.R:
        raise InputError(f"cardinality {r} not present in the hypergraph (levels: {sorted(H.R)})")
    if r < 2:
        raise InputError(f"neighborhoods require cardinality >= 2, got {r}")
    for v in vertices:
        if not 1 <= v <= H.n:
            raise InputError(f"vertex {v} outside 1..{H.n}")


def neighborhood(H: Hypergraph, r: int, i: int) -> NeighborhoodSet:
    """All (r-1)-sets A with A + {i} an r-edge."""
    _check_level_vertex(H, r, i)
    bit = 1 << (i - 1)
    sets = frozenset(labels_of(m ^ bit) for m in H.level_masks(r) if m & bit)
    return NeighborhoodSet(r - 1, sets)


def pair_neighborhood(H: Hypergraph, r: int, i: int, j: int) -> NeighborhoodSet:
    """All (r-2)-sets B with B + {i,j} an r-edge."""
    _check_level_vertex(H, r, i, j)
    if i == j:
        raise InputError("pair neighborhood requires two distinct vertices")
    pair = (1 << (i - 1)) | (1 << (j - 1))
    sets = frozenset(labels_of(m ^ pair) for m in H.level_masks(r) if m & pair == pair)
    return NeighborhoodSet(r - 2, sets)


def diff_neighborhood(H: Hypergraph, r: int, i: int, j: int) -> NeighborhoodSet:
    """All A in the i-neighborhood avoiding j with A + {j} not an r-edge."""
    _check_level_vertex(H, r, i, j)
    if i == j:
        raise InputError("difference neighborhood requires two distinct vertices")
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    masks = H.level_masks(r)
    sets = frozenset(
        labels_of(m ^ bi)
        for m in masks
        if m & bi and not m & bj and ((m ^ bi) | bj) not in masks
    )
    return NeighborhoodSet(r - 1, sets)


# -- complete-subgraph (clique) search --------------------------------------


def _is_complete_for(H: Hypergraph, members: Sequence[int], Rq: frozenset[int]) -> bool:
    for r in Rq:
        if r > len(members):
            continue  # vacuous: no r-subsets exist
        masks = H.level_masks(r)
        for sub in combinations(members, r):
            if mask_of(sub) not in masks:
                return False
    return True


def max_complete_subgraph_order(
    H: Hypergraph, R_query: Iterable[int]
) -> tuple[int, tuple[int, ...]]:
    """Largest S whose r-subsets are all edges for every r in R_query.

    Conditions with r > |S| are vacuous.  Exact backtracking with pruning,
    ordered by descending degree in the smallest non-singleton level of the
    query (ties by label); intended for n up to ~30.
    """
    Rq = frozenset(R_query)
    if not Rq <= H.R:
        missing = sorted(Rq - H.R)
        raise InputError(f"query cardinalities {missing} not present in the hypergraph")
    n = H.n

    candidates = list(range(1, n + 1))
    if 1 in Rq:
        ones = H.level_masks(1)
        candidates = [v for v in candidates if (1 << (v - 1)) in ones]

    higher = sorted(r for r in Rq if r >= 2)
    r0 = higher[0] if higher else None
    if r0 is not None:
        candidates.sort(key=lambda v: (-H.degree(v, r0), v))

    adj2 = None
    if 2 in Rq:
        adj2 = [0] * (n + 1)
        for m in H.level_masks(2):
            a, b = labels_of(m)
            adj2[a] |= 1 << (b - 1)
            adj2[b] |= 1 << (a - 1)

    deep = [r for r in higher if r >= 3]
    mask_sets = {r: H.level_masks(r) for r in deep}

    best_size = 0
    best_set: tuple[int, ...] = ()

    def can_add(S: list[int], v: int) -> bool:
        if adj2 is not None:
            vbit_adj = adj2[v]
            for u in S:
                if not vbit_adj & (1 << (u - 1)):
                    return False
        for r in deep:
            if len(S) >= r - 1:
                masks = mask_sets[r]
                vbit = 1 << (v - 1)
                for sub in combinations(S, r - 1):
                    if (mask_of(sub) | vbit) not in masks:
                        return False
        return True

    def extend(S: list[int], rest: list[int]) -> None:
        nonlocal best_size, best_set
        if len(S) > best_size:
            best_size = len(S)
            best_set = tuple(sorted(S))
        for pos, v in enumerate(rest):
            if len(S) + len(rest) - pos <= best_size:
                return
            if can_add(S, v):
                S.append(v)
                extend(S, rest[pos + 1 :])
                S.pop()

    extend([], candidates)
    return best_size, best_set


def edge_count(H: Hypergraph, r: int) -> int:
    """Number of r-edges; 0 when the cardinality is absent."""
    return H.edge_count(r)


# -- packed form for the numeric kernels ------------------------------------


def packed_incidence(H: Hypergraph) -> tuple[np.ndarray, np.ndarray]:
    """0-based edge-by-slot index matrix, padded with index n (a slot whose
    weight is pinned to 1), plus the true arity of each row.

    Rows follow the canonical order: levels ascending, edges sorted within
    each level.  Cached on the instance.
    """
    if H._packed is None:
        arities = []
        rows = []
        width = max(H.R, default=1)
        for r in sorted(H._levels):
            for e in H._levels[r]:
                rows.append([v - 1 for v in e] + [H.n] * (width - r))
                arities.append(r)
        verts = np.array(rows, dtype=np.int64).reshape(len(rows), width)
        H._packed = (verts, np.array(arities, dtype=np.int64))
    return H._packed


# -- file formats ------------------------------------------------------------


def from_text(text: str) -> Hypergraph:
    """Parse the plain-text graph format: a header line ``n <count>`` then one
    edge per line as space-separated increasing labels; ``#`` starts a comment.
    """
    n = None
    edges: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError("expected header 'n <count>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"vertex count {parts[1]!r} is not an integer", lineno) from None
            if n < 1 or n > MAX_VERTICES:
                raise ParseError(f"vertex count must be in 1..{MAX_VERTICES}", lineno)
            continue
        try:
            labels = tuple(int(p) for p in parts)
        except ValueError:
            raise ParseError(f"non-integer vertex label in {line!r}", lineno) from None
        if any(b <= a for a, b in zip(labels, labels[1:])):
            raise ParseError(f"edge {labels} is not strictly increasing", lineno)
        if labels[0] < 1 or labels[-1] > n:
            raise ParseError(f"edge {labels} has labels outside 1..{n}", lineno)
        m = mask_of(labels)
        if m in seen:
            raise ParseError(f"duplicate edge {labels}", lineno)
        seen.add(m)
        edges.append(labels)
    if n is None:
        raise ParseError("missing header line 'n <count>'")
    return Hypergraph(n, edges)


def to_text(H: Hypergraph) -> str:
    lines = [f"n {H.n}"]
    lines.extend(" ".join(str(v) for v in e) for e in H.all_edges())
    return "\n".join(lines) + "\n"


def from_json_dict(data) -> Hypergraph:
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ParseError("graph JSON must be an object with keys 'n' and 'edges'")
    n = data["n"]
    edges = data["edges"]
    if not isinstance(edges, list):
        raise ParseError("'edges' must be a list of label lists")
    for k, e in enumerate(edges):
        if not isinstance(e, list) or not all(isinstance(v, int) for v in e):
            raise ParseError(f"edge #{k} is not a list of integers")
    return Hypergraph(n, edges)


def to_json_dict(H: Hypergraph) -> dict:
    return {"n": H.n, "edges": [list(e) for e in H.all_edges()]}


def loads(text: str) -> Hypergraph:
    """Parse either format, sniffing JSON by a leading '{'."""
    if text.lstrip()[:1] == "{":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}", exc.lineno) from None
        return from_json_dict(data)
    return from_text(text)


def load_graph(path) -> Hypergraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read graph file {path}: {exc.strerror}") from None
    return loads(text)
