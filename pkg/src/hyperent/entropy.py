"""Exact local entropic measures of hypergraph states.

For qubit ``t`` the reduced state is ``[[1/2, a], [a, 1/2]]`` with
``a = (2**(n-1) - 2 hw(g_t)) / 2**n``, so the measure ``det(rho_t) = 1/4 - a**2``
is obtained from the Hamming weight of the t-adjacent subhypergraph alone.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .hypergraph import (
    Hypergraph,
    HypergraphError,
    check_vertex,
    contains_full_edge,
    rank,
    t_adjacent,
)
from .weight import hamming_weight

QUARTER = Fraction(1, 4)
ZERO = Fraction(0)


def off_diagonal(n: int, hw_gt: int) -> Fraction:
    if not 0 <= hw_gt <= 1 << (n - 1):
        raise HypergraphError(f"hw(g_t) = {hw_gt} outside 0..{1 << (n - 1)}")
    return Fraction((1 << (n - 1)) - 2 * hw_gt, 1 << n)


def measure_from_off_diagonal(a: Fraction) -> Fraction:
    return QUARTER - a * a


def smallest_eigenvalue(a: Fraction) -> Fraction:
    """``1/2 - |a|``; the determinant equals ``lam * (1 - lam)``."""
    return Fraction(1, 2) - abs(a)


def _off_diagonal_statevector(g: Hypergraph, t: int) -> Fraction:
    from .state import build_state, reduced_density

    return reduced_density(build_state(g), t).a


def vertex_off_diagonal(g: Hypergraph, t: int, method: str = "auto") -> Fraction:
    check_vertex(g.n, t)
    if method == "statevector":
        return _off_diagonal_statevector(g, t)
    return off_diagonal(g.n, hamming_weight(t_adjacent(g, t), method))


def entropic_measure(g: Hypergraph, t: int, method: str = "auto") -> Fraction:
    """``E_2^t(|g>)`` as an exact fraction in ``[0, 1/4]``."""
    return measure_from_off_diagonal(vertex_off_diagonal(g, t, method))


@dataclass(frozen=True)
class EntropicProfile:
    n: int
    measures: tuple[Fraction, ...]

    def __iter__(self):
        return iter(self.measures)

    def __getitem__(self, t: int) -> Fraction:
        """Measure of qubit ``t`` (1-based)."""
        check_vertex(self.n, t)
        return self.measures[t - 1]

    @property
    def is_lme(self) -> bool:
        return self.n > 0 and all(e == QUARTER for e in self.measures)


def entropic_profile(g: Hypergraph, method: str = "auto") -> EntropicProfile:
    return EntropicProfile(g.n, tuple(entropic_measure(g, t, method) for t in range(1, g.n + 1)))


def is_locally_maximally_entangled(g: Hypergraph, method: str = "auto") -> bool:
    return entropic_profile(g, method).is_lme


class VertexClass(enum.Enum):
    UNENTANGLED = "unentangled"
    GUARANTEED_MAX = "guaranteed-max"
    STRICT_INTERIOR = "strict-interior"
    UNCONSTRAINED = "unconstrained"


@dataclass(frozen=True)
class VertexRecord:
    t: int
    rank_gt: int
    hw_gt: int
    a: Fraction
    measure: Fraction
    kind: VertexClass


def _vertex_class(n: int, rank_gt: int) -> VertexClass:
    # Precedence matters for n <= 2, where rank n-1 coincides with rank 0 or 1.
    if rank_gt == 0:
        return VertexClass.UNENTANGLED
    if rank_gt == 1:
        return VertexClass.GUARANTEED_MAX
    if rank_gt == n - 1:
        return VertexClass.STRICT_INTERIOR
    return VertexClass.UNCONSTRAINED


def _class_admits(kind: VertexClass, measure: Fraction) -> bool:
    if kind is VertexClass.UNENTANGLED:
        return measure == 0
    if kind is VertexClass.GUARANTEED_MAX:
        return measure == QUARTER
    if kind is VertexClass.STRICT_INTERIOR:
        return 0 < measure < QUARTER
    return True


def classify_vertex(g: Hypergraph, t: int, method: str = "auto") -> VertexRecord:
    """Classify qubit ``t`` by the rank of ``g_t`` and check the implied constraint."""
    check_vertex(g.n, t)
    gt = t_adjacent(g, t)
    rank_gt = rank(gt)
    hw_gt = hamming_weight(gt, method)
    a = off_diagonal(g.n, hw_gt)
    measure = measure_from_off_diagonal(a)
    kind = _vertex_class(g.n, rank_gt)
    if not _class_admits(kind, measure):
        raise ArithmeticError(
            f"rank(g_{t}) = {rank_gt} implies {kind.value} but E = {measure} for {g}"
        )
    return VertexRecord(t, rank_gt, hw_gt, a, measure, kind)


class BoundKind(enum.Enum):
    ZERO = "zero"
    ZERO_OR_MAX = "zero-or-max"
    OPEN_INTERVAL = "open-interval"
    UNCONSTRAINED = "unconstrained"


@dataclass(frozen=True)
class MeasureBound:
    kind: BoundKind

    def admits(self, measure: Fraction) -> bool:
        if self.kind is BoundKind.ZERO:
            return measure == 0
        if self.kind is BoundKind.ZERO_OR_MAX:
            return measure in (ZERO, QUARTER)
        if self.kind is BoundKind.OPEN_INTERVAL:
            return 0 < measure < QUARTER
        return True


def rank_measure_bounds(g: Hypergraph) -> tuple[MeasureBound, ...]:
    """Per-vertex constraint on ``E_2^t`` implied by ``rank(g)`` alone.

    Rank 0 or 1 forces 0 everywhere, rank 2 forces ``{0, 1/4}``, and rank ``n``
    forces the open interval; the first matching rule wins, which matters for
    ``n <= 2``.
    """
    r = rank(g)
    if r <= 1:
        kind = BoundKind.ZERO
    elif r == 2:
        kind = BoundKind.ZERO_OR_MAX
    elif r == g.n:
        kind = BoundKind.OPEN_INTERVAL
    else:
        kind = BoundKind.UNCONSTRAINED
    return (MeasureBound(kind),) * g.n


class WitnessKind(enum.Enum):
    PARITY_CERTIFICATE = "parity-certificate"
    PROFILE_MISMATCH = "profile-mismatch"
    SORTED_PROFILE_MISMATCH = "sorted-profile-mismatch"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class LuWitness:
    kind: WitnessKind
    vertex: int | None = None
    detail: tuple[Fraction, Fraction] | None = None

    @property
    def certified(self) -> bool:
        return self.kind is not WitnessKind.INCONCLUSIVE


def lu_inequivalence_witness(
    g: Hypergraph, g2: Hypergraph, up_to_relabeling: bool = False, method: str = "auto"
) -> LuWitness:
    """Certify that ``|g>`` and ``|g2>`` are not LU equivalent, when possible.

    Equal profiles only ever yield ``INCONCLUSIVE``. The parity certificate
    needs ``n >= 2``: on a single qubit every pair of states is LU equivalent.
    """
    if g.n != g2.n:
        raise HypergraphError(f"vertex counts differ: {g.n} vs {g2.n}")
    if g.n >= 2 and contains_full_edge(g) != contains_full_edge(g2):
        return LuWitness(
            WitnessKind.PARITY_CERTIFICATE,
            1,
            (entropic_measure(g, 1, method), entropic_measure(g2, 1, method)),
        )
    p1 = entropic_profile(g, method).measures
    p2 = entropic_profile(g2, method).measures
    for t, (e1, e2) in enumerate(zip(p1, p2), start=1):
        if e1 != e2:
            if not up_to_relabeling:
                return LuWitness(WitnessKind.PROFILE_MISMATCH, t, (e1, e2))
            break
    if up_to_relabeling:
        for e1, e2 in zip(sorted(p1), sorted(p2)):
            if e1 != e2:
                return LuWitness(WitnessKind.SORTED_PROFILE_MISMATCH, None, (e1, e2))
    return LuWitness(WitnessKind.INCONCLUSIVE)
