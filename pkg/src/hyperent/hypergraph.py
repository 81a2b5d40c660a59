"""Hypergraphs over vertices 1..n with hyperedges stored as bit masks.

Bit ``i - 1`` of a mask is set iff vertex ``i`` belongs to the hyperedge, so
the empty hyperedge is the mask ``0`` and the full hyperedge ``[n]`` is
``2**n - 1``.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from typing import Iterable

MAX_N = 20
M_MAX = 24


class HypergraphError(ValueError):
    """Malformed hypergraph description or invalid structural argument."""


class InfeasibleError(ValueError):
    """The requested computation exceeds the configured size limits."""


def max_n() -> int:
    """Vertex limit in effect; ``HYPERENT_MAX_N`` may lower but never raise it."""
    raw = os.environ.get("HYPERENT_MAX_N")
    if not raw:
        return MAX_N
    try:
        value = int(raw)
    except ValueError:
        return MAX_N
    return max(1, min(MAX_N, value))


def popcount(mask: int) -> int:
    return mask.bit_count()


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_to_vertices(mask: int) -> list[int]:
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


def vertices_to_mask(vertices: Iterable[int], n: int) -> int:
    mask = 0
    for v in vertices:
        if isinstance(v, bool) or not isinstance(v, int):
            raise HypergraphError(f"vertex {v!r} is not an integer")
        if not 1 <= v <= n:
            raise HypergraphError(f"vertex {v} outside 1..{n}")
        mask |= 1 << (v - 1)
    return mask


def edge_sort_key(mask: int) -> tuple[int, int]:
    return (popcount(mask), mask)


@dataclass(frozen=True)
class Hypergraph:
    """An immutable hypergraph ``([n], E)``.

    ``edges`` is a frozenset of masks. ``n = 0`` is accepted only so that the
    adjacent subhypergraph of a one-vertex hypergraph is representable;
    :func:`parse` insists on ``n >= 1``.
    """

    n: int
    edges: frozenset[int]

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise HypergraphError(f"n must be an integer, got {self.n!r}")
        if self.n < 0 or self.n > max_n():
            raise HypergraphError(f"n = {self.n} outside 0..{max_n()}")
        edges = frozenset(self.edges)
        limit = full_mask(self.n)
        for e in edges:
            if e < 0 or e & ~limit:
                raise HypergraphError(f"edge mask {e:#b} has bits outside 1..{self.n}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
        """Build from vertex lists, e.g. ``Hypergraph.from_edges(3, [[1, 2], []])``."""
        return cls(n, frozenset(vertices_to_mask(e, n) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[int]:
        return sorted(self.edges, key=edge_sort_key)

    def edge_lists(self) -> list[list[int]]:
        return [mask_to_vertices(e) for e in self.sorted_edges()]

    def with_edge(self, mask: int) -> Hypergraph:
        return Hypergraph(self.n, self.edges | {mask})

    def without_edge(self, mask: int) -> Hypergraph:
        return Hypergraph(self.n, self.edges - {mask})

    def toggle_edge(self, mask: int) -> Hypergraph:
        return Hypergraph(self.n, self.edges ^ {mask})

    def __str__(self) -> str:
        return serialize(self)


_HEADER = re.compile(r"\s*(\d+)\s*:(.*)\Z", re.DOTALL)
_GROUP = re.compile(r"\s*\{([^{}]*)\}")


def parse_compact(text: str) -> Hypergraph:
    """Parse ``"<n>: {i,j,...} {k,...} ..."``; ``{}`` is the empty hyperedge."""
    match = _HEADER.match(text)
    if match is None:
        raise HypergraphError(f"expected '<n>: {{...}} ...', got {text!r}")
    n = int(match.group(1))
    _check_n(n)
    rest = match.group(2)
    edges = []
    pos = 0
    while rest[pos:].strip():
        group = _GROUP.match(rest, pos)
        if group is None:
            raise HypergraphError(f"malformed hyperedge near {rest[pos:].strip()!r}")
        body = group.group(1).strip()
        vertices = []
        if body:
            for token in body.split(","):
                token = token.strip()
                if not re.fullmatch(r"-?\d+", token):
                    raise HypergraphError(f"bad vertex {token!r} in {{{body}}}")
                vertices.append(int(token))
        edges.append(vertices)
        pos = group.end()
    return Hypergraph.from_edges(n, edges)


def parse_json(text: str | dict) -> Hypergraph:
    """Parse ``{"n": 4, "edges": [[4], [1, 2]]}``; ``[]`` is the empty hyperedge."""
    if isinstance(text, str):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise HypergraphError(f"invalid JSON: {exc}") from None
    else:
        data = text
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise HypergraphError("JSON hypergraph needs keys 'n' and 'edges'")
    n, edges = data["n"], data["edges"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise HypergraphError(f"n must be an integer, got {n!r}")
    _check_n(n)
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise HypergraphError("'edges' must be a list of vertex lists")
    return Hypergraph.from_edges(n, edges)


def parse(text: str) -> Hypergraph:
    """Parse either the compact text format or the JSON format."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_compact(text)


def _check_n(n: int) -> None:
    if n < 1:
        raise HypergraphError(f"n must be at least 1, got {n}")
    if n > max_n():
        raise HypergraphError(f"n = {n} exceeds MAX_N = {max_n()}")


def serialize(g: Hypergraph) -> str:
    """Canonical compact form, edges ordered by (cardinality, mask)."""
    parts = ["{" + ",".join(map(str, mask_to_vertices(e))) + "}" for e in g.sorted_edges()]
    return f"{g.n}:" + "".join(" " + p for p in parts)


def to_json(g: Hypergraph) -> str:
    return json.dumps({"n": g.n, "edges": g.edge_lists()})


def rank(g: Hypergraph) -> int:
    return max((popcount(e) for e in g.edges), default=0)


def t_adjacent(g: Hypergraph, t: int) -> Hypergraph:
    """The t-adjacent subhypergraph: edges through ``t`` with ``t`` removed.

    Remaining vertices are relabeled ``1..n-1`` in their original order.
    """
    check_vertex(g.n, t)
    bit = t - 1
    low = (1 << bit) - 1
    edges = set()
    for e in g.edges:
        if e >> bit & 1:
            edges.add((e & low) | (e >> (bit + 1)) << bit)
    return Hypergraph(g.n - 1, frozenset(edges))


def contains_full_edge(g: Hypergraph) -> bool:
    return full_mask(g.n) in g.edges


def is_graph(g: Hypergraph) -> bool:
    """True iff every hyperedge has exactly two vertices (vacuously for no edges)."""
    return all(popcount(e) == 2 for e in g.edges)


def check_vertex(n: int, t: int) -> None:
    if isinstance(t, bool) or not isinstance(t, int) or not 1 <= t <= n:
        raise HypergraphError(f"vertex {t!r} outside 1..{n}")
