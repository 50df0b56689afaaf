"""Explicit distinguishing colorings and endomorphism facts about finite trees."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterator, Literal, NamedTuple, Sequence

import numpy as np

from .endo import VertexMap, is_endomorphism, search_maps
from .graph import Graph, induced_subgraph, is_tree


def even_cycle_coloring(k: int) -> tuple[int, ...]:
    """2-coloring of C_{2k} with vertices 0, 1 and 3 black (color 1)."""
    if k < 3:
        raise ValueError(
            "even_cycle_coloring needs k >= 3; C_4 has D_e(C_4) = 3 and no "
            "distinguishing 2-coloring"
        )
    return tuple(1 if v in (0, 1, 3) else 0 for v in range(2 * k))


_PERIOD = (0, 0, 1, 1)


def path_coloring(n: int) -> tuple[int, ...]:
    """2-coloring of P_n built from the period ``0 0 1 1``.

    The period starts at its first entry unless ``n = 2 mod 4``, where that
    start would make the coloring a palindrome, so it starts one step later.
    Vertices at distance two always differ and the reversal is never
    preserved.
    """
    if n < 2:
        raise ValueError("path_coloring needs n >= 2; P_1 is rigid")
    shift = 1 if n % 4 == 2 else 0
    return tuple(_PERIOD[(i + shift) % 4] for i in range(n))


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise ValueError("graph is not a tree")


def pendant_fold(t: Graph, a: int) -> VertexMap:
    """Map pendant vertex ``a`` onto its least-index sibling, fixing the rest."""
    _require_tree(t)
    if t.degree(a) != 1:
        raise ValueError(f"vertex {a} is not pendant")
    (b,) = t.neighbors(a)
    others = [c for c in t.neighbors(b) if c != a]
    if not others:
        raise ValueError("the neighbor of the pendant vertex has degree 1")
    image = list(range(t.order))
    image[a] = others[0]
    return tuple(image)


class Dist2Verdict(NamedTuple):
    status: Literal["holds", "violated", "vacuous"]
    pair: tuple[int, int] | None


def _require_tree_endo(t: Graph, f: Sequence[int]) -> None:
    _require_tree(t)
    if not is_endomorphism(t, f):
        raise ValueError("map is not an endomorphism")


def check_dist2_identification(t: Graph, f: Sequence[int]) -> Dist2Verdict:
    """Find the first pair ``x < y`` at distance 2 with ``f[x] == f[y]``.

    Automorphisms give ``vacuous``. A non-injective map without such a pair
    would be a counterexample and gives ``violated``.
    """
    _require_tree_endo(t, f)
    if len(set(f)) == t.order:
        return Dist2Verdict("vacuous", None)
    dist = t.distances
    for x in range(t.order):
        for y in range(x + 1, t.order):
            if dist[x][y] == 2 and f[x] == f[y]:
                return Dist2Verdict("holds", (x, y))
    return Dist2Verdict("violated", None)


def check_fixed_points_connected(t: Graph, f: Sequence[int]) -> bool:
    """Whether the fixed points of ``f`` induce a connected (or empty) subgraph."""
    _require_tree_endo(t, f)
    fixed = [v for v, x in enumerate(f) if x == v]
    if not fixed:
        return True
    sub, _ = induced_subgraph(t, fixed)
    return sub.is_connected()


# Bulk verification over a whole endomorphism monoid


@dataclass(frozen=True)
class TreeCensus:
    endomorphisms: int
    automorphisms: int
    dist2_violations: int
    fixed_point_violations: int

    @property
    def clean(self) -> bool:
        return self.dist2_violations == 0 and self.fixed_point_violations == 0


def _product_blocks(
    domains: list[np.ndarray], chunk: int
) -> Iterator[np.ndarray]:
    """Cartesian product of ``domains`` as row blocks of at most ``chunk`` rows
    (unless a single domain alone is larger)."""
    if not domains:
        yield np.zeros((1, 0), dtype=np.int16)
        return
    if prod(len(d) for d in domains) <= chunk or len(domains) == 1:
        grids = np.meshgrid(*domains, indexing="ij")
        yield np.stack([g.ravel() for g in grids], axis=1).astype(np.int16)
        return
    head, rest = domains[0], domains[1:]
    for x in head:
        for block in _product_blocks(rest, chunk):
            yield np.column_stack([np.full(len(block), x, dtype=np.int16), block])


def _lemma_counts(block: np.ndarray, pairs: np.ndarray, edges: np.ndarray) -> np.ndarray:
    """Per-block tallies: rows, injective rows, non-injective rows without an
    identified distance-2 pair, rows with a disconnected fixed-point set."""
    srt = np.sort(block, axis=1)
    injective = np.all(srt[:, 1:] != srt[:, :-1], axis=1)
    merged = np.any(block[:, pairs[:, 0]] == block[:, pairs[:, 1]], axis=1)
    fixed = block == np.arange(block.shape[1])
    nfix = fixed.sum(axis=1)
    nedge = (fixed[:, edges[:, 0]] & fixed[:, edges[:, 1]]).sum(axis=1)
    # an induced subforest is connected iff it has one edge fewer than vertices
    return np.array([
        len(block),
        injective.sum(),
        (~injective & ~merged).sum(),
        ((nfix > 0) & (nedge != nfix - 1)).sum(),
    ])


def tree_lemma_census(t: Graph, chunk: int = 1 << 18) -> TreeCensus:
    """Check both tree lemmas against every endomorphism of ``t``.

    Endomorphisms are generated as (map on the inner vertices) times (free
    choice of a neighbor of the parent's image for each leaf), which lists
    End(t) exactly once, and the checks run vectorized over row blocks.
    """
    _require_tree(t)
    n = t.order
    leaves = [v for v in range(n) if t.degree(v) == 1]
    inner = [v for v in range(n) if t.degree(v) != 1]
    if not inner:
        inner, leaves = [0], [v for v in range(1, n)]
    core, labels = induced_subgraph(t, inner)
    slot = {v: i for i, v in enumerate(labels)}
    parent = [slot[t.neighbors(v)[0]] for v in leaves]
    nbrs = [np.asarray(t.neighbors(x), dtype=np.int16) for x in range(n)]

    dist = t.distances
    pairs = np.array(
        [(x, y) for x in range(n) for y in range(x + 1, n) if dist[x][y] == 2],
        dtype=np.intp,
    ).reshape(-1, 2)
    edges = np.array(list(t.edges()), dtype=np.intp).reshape(-1, 2)
    totals = np.zeros(4, dtype=np.int64)
    pending: list[np.ndarray] = []
    size = 0
    for h in search_maps(core, t):
        doms = [nbrs[h[p]] for p in parent]
        for block in _product_blocks(doms, chunk):
            full = np.empty((len(block), n), dtype=np.int16)
            full[:, inner] = h
            full[:, leaves] = block
            pending.append(full)
            size += len(full)
            if size >= chunk:
                totals += _lemma_counts(np.concatenate(pending), pairs, edges)
                pending, size = [], 0
    if pending:
        totals += _lemma_counts(np.concatenate(pending), pairs, edges)
    return TreeCensus(*(int(x) for x in totals))
