"""Hamming weight of the Boolean function ``u(g) = XOR_{e in E} prod_{k in e} x_k``.

Two independent routes are provided: exhaustive evaluation of the truth table
(packed into a Python integer, one bit per input ``x``) and the
inclusion-exclusion sum over subsets of hyperedges. No floating point is used.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from .hypergraph import (
    M_MAX,
    Hypergraph,
    HypergraphError,
    InfeasibleError,
    contains_full_edge,
    full_mask,
    max_n,
    popcount,
    rank,
)

# Multiplier applied each time another hyperedge joins a subset term.
_IE_FACTOR = -2


@lru_cache(maxsize=None)
def _variable_pattern(n: int, i: int) -> int:
    """Bitset over inputs ``x`` in ``[0, 2**n)`` with bit ``i`` of ``x`` set."""
    half = 1 << i
    pattern = ((1 << half) - 1) << half
    width = half << 1
    size = 1 << n
    while width < size:
        pattern |= pattern << width
        width <<= 1
    return pattern


def monomial_table(n: int, mask: int) -> int:
    """Packed truth table of ``c(e)``; the empty hyperedge gives the constant 1."""
    table = (1 << (1 << n)) - 1
    for i in range(n):
        if mask >> i & 1:
            table &= _variable_pattern(n, i)
    return table


@dataclass(frozen=True)
class TruthTable:
    """Truth table of ``u(g)``; bit ``x`` of ``bits`` is ``u(g)(x)``.

    Input index ``x`` carries variable ``x_i`` in its bit ``i - 1``.
    """

    n: int
    bits: int

    def __len__(self) -> int:
        return 1 << self.n

    def __getitem__(self, x: int) -> int:
        if not 0 <= x < len(self):
            raise IndexError(x)
        return self.bits >> x & 1

    def __iter__(self):
        return (self.bits >> x & 1 for x in range(len(self)))

    @property
    def weight(self) -> int:
        return popcount(self.bits)


def truth_table(g: Hypergraph) -> TruthTable:
    if g.n > max_n():
        raise InfeasibleError(f"truth table for n = {g.n} exceeds MAX_N = {max_n()}")
    bits = 0
    for e in g.edges:
        bits ^= monomial_table(g.n, e)
    return TruthTable(g.n, bits)


def hw_bruteforce(g: Hypergraph) -> int:
    """Weight by counting the ones of the full truth table."""
    return truth_table(g).weight


def hw_inclusion_exclusion(g: Hypergraph) -> int:
    """Weight as ``sum over nonempty S of E of (-2)**(|S|-1) * 2**(n - |union S|)``.

    Subset terms sharing the same union are merged while the hyperedges are
    folded in one at a time, so the cost is bounded by ``m`` times the number
    of distinct unions rather than ``2**m``.
    """
    if g.m > M_MAX:
        raise InfeasibleError(f"inclusion-exclusion over {g.m} edges exceeds M_MAX = {M_MAX}")
    coeffs: dict[int, int] = defaultdict(int)
    for e in g.sorted_edges():
        extended: dict[int, int] = defaultdict(int)
        extended[e] += 1
        for union, c in coeffs.items():
            extended[union | e] += _IE_FACTOR * c
        for union, c in extended.items():
            coeffs[union] += c
    return sum(c << (g.n - popcount(u)) for u, c in coeffs.items())


def hw_statevector(g: Hypergraph) -> int:
    """Weight read off the state-vector oracle as the number of negative signs."""
    from .state import build_state

    return int((build_state(g).signs < 0).sum())


def hw_is_odd(g: Hypergraph) -> bool:
    return contains_full_edge(g)


def hw_full_edge_recurrence(g: Hypergraph) -> int:
    """``hw(g) = hw(g - [n]) + (-1)**(m-1)`` for a hypergraph containing ``[n]``."""
    if not contains_full_edge(g):
        raise HypergraphError("recurrence requires the full hyperedge [n] in E")
    rest = g.without_edge(full_mask(g.n))
    return hw_inclusion_exclusion(rest) + (-1) ** (g.m - 1)


@dataclass(frozen=True)
class WeightBound:
    """Weights admitted by the rank of a hypergraph; ``allowed=None`` means any."""

    rank: int
    allowed: frozenset[int] | None

    def admits(self, hw: int) -> bool:
        return self.allowed is None or hw in self.allowed


def rank_weight_bounds(g: Hypergraph) -> WeightBound:
    r = rank(g)
    if r == 0:
        return WeightBound(r, frozenset({0, 1 << g.n}))
    if r == 1:
        return WeightBound(r, frozenset({1 << (g.n - 1)}))
    return WeightBound(r, None)


METHODS = ("auto", "ie", "tt", "statevector")


def choose_method(g: Hypergraph) -> str:
    """Pick a feasible route: inclusion-exclusion when it is cheaper or the only option."""
    tt_ok = g.n <= max_n()
    ie_ok = g.m <= M_MAX
    if ie_ok and (not tt_ok or g.m <= g.n):
        return "ie"
    if tt_ok:
        return "tt"
    raise InfeasibleError(f"no feasible weight method for n = {g.n}, |E| = {g.m}")


def hamming_weight(g: Hypergraph, method: str = "auto") -> int:
    if method == "auto":
        method = choose_method(g)
    if method == "ie":
        return hw_inclusion_exclusion(g)
    if method == "tt":
        return hw_bruteforce(g)
    if method == "statevector":
        return hw_statevector(g)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
