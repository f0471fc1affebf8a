"""Left-compression of hypergraph edge sets.

The single-edge rewrite replaces vertex j by vertex i (for i < j) whenever
that is possible; the edge-set operator maps E to the image of the rewrite
together with every edge whose image was already present, which preserves the
edge count of every level.  Iterating over all pairs reaches a fixpoint that
is invariant under every rewrite, and for weight vectors sorted decreasingly
the evaluation never drops along the way.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError
from .hypergraph import Hypergraph, labels_of, mask_of


@dataclass(frozen=True)
class CompressionTrace:
    steps: tuple[tuple[int, int, int], ...]  # (i, j, edges rewritten)
    initial_edge_counts: tuple[tuple[int, int], ...]
    final_edge_counts: tuple[tuple[int, int], ...]
    sweeps: int


def _check_pair(i: int, j: int) -> None:
    if not (isinstance(i, int) and isinstance(j, int)):
        raise InputError("compression vertices must be integers")
    if i >= j:
        raise InputError(f"compression requires i < j, got i={i}, j={j}")
    if i < 1:
        raise InputError(f"vertex labels start at 1, got i={i}")


def compress_edge(e: Iterable[int], i: int, j: int) -> tuple[int, ...]:
    """Rewrite one edge: (e - {j}) + {i} when i is absent and j present."""
    _check_pair(i, j)
    members = set(e)
    if i not in members and j in members:
        members.discard(j)
        members.add(i)
    return tuple(sorted(members))


def _compress_level_masks(masks: frozenset[int], bi: int, bj: int) -> tuple[frozenset[int], int]:
    """Apply the edge-set operator to one level of bitmask edges.

    Returns the new level and how many edges were actually rewritten.
    """
    out = set()
    moved = 0
    for m in masks:
        if m & bj and not m & bi:
            image = (m ^ bj) | bi
            if image in masks:
                out.add(m)  # image already present: the edge survives
            else:
                out.add(image)
                moved += 1
        else:
            out.add(m)
    return frozenset(out), moved


def compress_set(H: Hypergraph, i: int, j: int) -> Hypergraph:
    """Apply the pair (i, j) rewrite to every level; edge counts are preserved."""
    _check_pair(i, j)
    if j > H.n:
        raise InputError(f"vertex {j} outside 1..{H.n}")
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    edges = []
    for r in sorted(H.R):
        masks, _ = _compress_level_masks(H.level_masks(r), bi, bj)
        if len(masks) != H.edge_count(r):
            raise AssertionError("compression changed an edge count")
        edges.extend(labels_of(m) for m in masks)
    return Hypergraph(H.n, edges)


def is_left_compressed(H: Hypergraph) -> bool:
    """True when every pair rewrite maps the edge set to itself, i.e. for each
    edge, replacing any member j by any absent i < j lands on another edge."""
    for r in H.R:
        masks = H.level_masks(r)
        for m in masks:
            for j in labels_of(m):
                bj = 1 << (j - 1)
                for i in range(1, j):
                    bi = 1 << (i - 1)
                    if m & bi:
                        continue
                    if ((m ^ bj) | bi) not in masks:
                        return False
    return True


def left_compress(H: Hypergraph) -> tuple[Hypergraph, CompressionTrace]:
    """Sweep pairs (i, j) in lexicographic order until a full sweep is a no-op.

    Each effective step strictly decreases the total label sum over edges, so
    the loop terminates well within n^2 * (initial label sum) sweeps; a step
    counter enforces that bound defensively.
    """
    n = H.n
    levels = {r: H.level_masks(r) for r in H.R}
    initial = tuple((r, len(levels[r])) for r in sorted(levels))
    label_sum = sum(sum(labels_of(m)) for ms in levels.values() for m in ms)
    max_sweeps = max(1, n * n * max(1, label_sum))

    steps: list[tuple[int, int, int]] = []
    sweeps = 0
    while True:
        sweeps += 1
        if sweeps > max_sweeps:
            raise AssertionError("left compression failed to terminate within its bound")
        changed = False
        for i in range(1, n):
            bi = 1 << (i - 1)
            for j in range(i + 1, n + 1):
                bj = 1 << (j - 1)
                new_levels = {}
                moved_total = 0
                for r, masks in levels.items():
                    new_masks, moved = _compress_level_masks(masks, bi, bj)
                    new_levels[r] = new_masks
                    moved_total += moved
                if moved_total:
                    levels = new_levels
                    steps.append((i, j, moved_total))
                    changed = True
        if not changed:
            break

    edges = [labels_of(m) for ms in levels.values() for m in ms]
    result = Hypergraph(n, edges)
    trace = CompressionTrace(
        steps=tuple(steps),
        initial_edge_counts=initial,
        final_edge_counts=tuple((r, result.edge_count(r)) for r in sorted(result.R)),
        sweeps=sweeps,
    )
    return result, trace
