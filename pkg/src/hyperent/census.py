"""Enumeration of every edge set over a small vertex set."""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .hypergraph import Hypergraph

EXHAUSTIVE_MAX_N = 4


def hypergraph_from_code(n: int, code: int) -> Hypergraph:
    """Edge set whose mask ``e`` is present iff bit ``e`` of ``code`` is set."""
    return Hypergraph(n, frozenset(e for e in range(1 << n) if code >> e & 1))


def edge_set_code(g: Hypergraph) -> int:
    return sum(1 << e for e in g.edges)


def all_hypergraphs(n: int) -> Iterator[Hypergraph]:
    """All ``2**(2**n)`` hypergraphs on ``n`` vertices, by ascending edge-set code."""
    for code in range(1 << (1 << n)):
        yield hypergraph_from_code(n, code)


def random_hypergraph(
    rng: np.random.Generator, n: int, max_edges: int | None = None
) -> Hypergraph:
    """Uniform edge set, or a uniformly sized random subset of at most ``max_edges`` edges."""
    size = 1 << n
    if max_edges is None:
        keep = rng.random(size) < 0.5
        return Hypergraph(n, frozenset(int(e) for e in np.flatnonzero(keep)))
    m = int(rng.integers(0, min(max_edges, size) + 1))
    chosen = rng.choice(size, size=m, replace=False)
    return Hypergraph(n, frozenset(int(e) for e in chosen))
