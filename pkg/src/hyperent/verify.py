"""Self-verification: cross-check every route against the brute-force oracles."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from .census import all_hypergraphs, random_hypergraph
from .entropy import (
    QUARTER,
    rank_measure_bounds,
    entropic_measure,
    entropic_profile,
)
from .hypergraph import Hypergraph, contains_full_edge, full_mask, rank, serialize, t_adjacent
from .state import (
    apply_local_unitaries,
    build_state,
    random_unitary,
    reduced_density,
    reduced_density_float,
    to_amplitudes,
)
from .weight import (
    hw_bruteforce,
    hw_full_edge_recurrence,
    hw_inclusion_exclusion,
    rank_weight_bounds,
)

EXHAUSTIVE_N = 3
RANDOM_CASES = 300
RANDOM_MAX_EDGES = 12
LU_CASES = 40
MAX_REPORTED_FAILURES = 5


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def guard(self, fn: Callable[..., None], g: Hypergraph, *extra) -> None:
        """Run ``fn`` on ``g``, recording an exception as a failing instance."""
        try:
            fn(self, g, *extra)
        except Exception as exc:
            self.checked += 1
            if len(self.failures) < MAX_REPORTED_FAILURES:
                self.failures.append(f"{serialize(g)} (raised {type(exc).__name__}: {exc})")

    def check(self, condition: bool, g: Hypergraph, message: str = "") -> None:
        self.checked += 1
        if not condition and len(self.failures) < MAX_REPORTED_FAILURES:
            note = f" ({message})" if message else ""
            self.failures.append(f"{serialize(g)}{note}")


def _check_weight_oracle(res: SuiteResult, g: Hypergraph) -> None:
    ie, tt = hw_inclusion_exclusion(g), hw_bruteforce(g)
    res.check(ie == tt, g, f"inclusion-exclusion {ie} != truth table {tt}")


def _check_parity(res: SuiteResult, g: Hypergraph) -> None:
    hw = hw_bruteforce(g)
    res.check((hw % 2 == 1) == contains_full_edge(g), g, f"hw = {hw}")


def _check_recurrence(res: SuiteResult, g: Hypergraph) -> None:
    g = g.with_edge(full_mask(g.n))
    rec, tt = hw_full_edge_recurrence(g), hw_bruteforce(g)
    res.check(rec == tt, g, f"recurrence {rec} != truth table {tt}")


def _check_rank_bounds(res: SuiteResult, g: Hypergraph) -> None:
    hw = hw_bruteforce(g)
    bound = rank_weight_bounds(g)
    res.check(bound.admits(hw), g, f"rank {bound.rank} but hw = {hw}")
    if hw in (0, 1 << g.n):
        res.check(rank(g) == 0, g, f"hw = {hw} but rank {rank(g)}")


def _check_complement(res: SuiteResult, g: Hypergraph) -> None:
    hw, hw_flip = hw_bruteforce(g), hw_bruteforce(g.toggle_edge(0))
    res.check(hw + hw_flip == 1 << g.n, g, f"{hw} + {hw_flip} != 2^{g.n}")


def _check_density_chain(res: SuiteResult, g: Hypergraph) -> None:
    sv = build_state(g)
    for t in range(1, g.n + 1):
        rho = reduced_density(sv, t)
        expected = Fraction((1 << (g.n - 1)) - 2 * hw_bruteforce(t_adjacent(g, t)), 1 << g.n)
        res.check(rho.a == expected, g, f"t = {t}: a = {rho.a}, hw route {expected}")
        measure = entropic_measure(g, t)
        res.check(measure == rho.det, g, f"t = {t}: E = {measure}, det = {rho.det}")
        res.check(0 <= measure <= QUARTER, g, f"t = {t}: E = {measure} out of [0, 1/4]")


def _check_prop5(res: SuiteResult, g: Hypergraph) -> None:
    for t in range(1, g.n + 1):
        r = rank(t_adjacent(g, t))
        e = entropic_measure(g, t)
        res.check((e == 0) == (r == 0), g, f"t = {t}: rank(g_t) = {r}, E = {e}")
        if r == 1:
            res.check(e == QUARTER, g, f"t = {t}: rank(g_t) = 1, E = {e}")
        # The open-interval claim for rank n-1 only holds once n >= 3.
        if r == g.n - 1 and g.n >= 3:
            res.check(0 < e < QUARTER, g, f"t = {t}: rank(g_t) = n-1, E = {e}")


def _check_cor6(res: SuiteResult, g: Hypergraph) -> None:
    profile = entropic_profile(g)
    for t, (bound, e) in enumerate(zip(rank_measure_bounds(g), profile), start=1):
        res.check(bound.admits(e), g, f"t = {t}: {bound.kind.value} violated by E = {e}")


def _check_prop7(res: SuiteResult, n: int) -> None:
    profiles = {g: entropic_profile(g).measures for g in all_hypergraphs(n)}
    full = [g for g in profiles if rank(g) == n]
    lower = [g for g in profiles if rank(g) <= n - 1]
    lower_values = [set(profiles[h][t] for h in lower) for t in range(n)]
    for g in full:
        for t in range(n):
            res.check(
                profiles[g][t] not in lower_values[t],
                g,
                f"t = {t + 1}: E = {profiles[g][t]} shared with a rank <= n-1 hypergraph",
            )


def _check_lu_invariance(res: SuiteResult, g: Hypergraph, rng: np.random.Generator) -> None:
    av = to_amplitudes(build_state(g))
    moved = apply_local_unitaries(av, [random_unitary(rng) for _ in range(g.n)])
    for t in range(1, g.n + 1):
        before = np.linalg.det(reduced_density_float(av, t)).real
        after = np.linalg.det(reduced_density_float(moved, t)).real
        exact = float(entropic_measure(g, t))
        res.check(abs(before - after) <= 1e-9, g, f"t = {t}: det {before} -> {after}")
        res.check(abs(before - exact) <= 1e-10, g, f"t = {t}: float {before} vs exact {exact}")


def _cases(seed: int, max_n: int) -> tuple[list[Hypergraph], list[Hypergraph]]:
    exhaustive = [g for n in range(1, min(EXHAUSTIVE_N, max_n) + 1) for g in all_hypergraphs(n)]
    rng = np.random.default_rng(seed)
    sampled = []
    if max_n >= 4:
        for _ in range(RANDOM_CASES):
            n = int(rng.integers(4, max_n + 1))
            sampled.append(random_hypergraph(rng, n, RANDOM_MAX_EDGES))
    return exhaustive, sampled


def run_suites(seed: int = 0, max_n: int = 8) -> list[SuiteResult]:
    exhaustive, sampled = _cases(seed, max_n)
    both = exhaustive + sampled
    plan: list[tuple[str, Callable[[SuiteResult, Hypergraph], None], Iterable[Hypergraph]]] = [
        ("weight-oracle", _check_weight_oracle, both),
        ("parity", _check_parity, both),
        ("full-edge-recurrence", _check_recurrence, both),
        ("rank-weight-bounds", _check_rank_bounds, both),
        ("empty-edge-complement", _check_complement, both),
        ("density-chain", _check_density_chain, both),
        ("vertex-classes", _check_prop5, both),
        ("rank-measure-bounds", _check_cor6, both),
    ]
    results = []
    for name, fn, cases in plan:
        res = SuiteResult(name)
        for g in cases:
            res.guard(fn, g)
        results.append(res)

    res = SuiteResult("full-edge-separation")
    if max_n >= EXHAUSTIVE_N:
        try:
            _check_prop7(res, EXHAUSTIVE_N)
        except Exception as exc:
            res.checked += 1
            res.failures.append(f"n = {EXHAUSTIVE_N} census (raised {type(exc).__name__}: {exc})")
    results.append(res)

    res = SuiteResult("lu-invariance")
    rng = np.random.default_rng(seed + 1)
    for _ in range(LU_CASES):
        n = int(rng.integers(1, min(max_n, 8) + 1))
        res.guard(_check_lu_invariance, random_hypergraph(rng, n, RANDOM_MAX_EDGES), rng)
    results.append(res)
    return results
