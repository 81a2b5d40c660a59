"""State-vector oracle for hypergraph states.

The exact track keeps the ``2**n`` amplitude signs as a ``±1`` integer array and
returns single-qubit reduced densities as :class:`fractions.Fraction`. The float
track exists for applying arbitrary local unitaries.

Basis index ``x`` stores qubit ``i`` in bit ``i - 1`` (qubit 1 is least
significant).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .hypergraph import Hypergraph, HypergraphError, InfeasibleError, check_vertex, max_n

UNITARY_TOL = 1e-10


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, copy=True)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class SignVector:
    """Signs of ``sqrt(2**n) * |g>``."""

    n: int
    signs: np.ndarray

    def __post_init__(self) -> None:
        signs = _frozen(np.asarray(self.signs, dtype=np.int8))
        if signs.shape != (1 << self.n,):
            raise ValueError(f"expected {1 << self.n} signs, got shape {signs.shape}")
        if not np.all(np.abs(signs) == 1):
            raise ValueError("every sign must be +1 or -1")
        object.__setattr__(self, "signs", signs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignVector):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.signs, other.signs)

    def __hash__(self) -> int:
        return hash((self.n, self.signs.tobytes()))


@dataclass(frozen=True)
class ReducedDensity1Q:
    """``[[1/2, a], [a, 1/2]]`` for one qubit of a hypergraph state."""

    a: Fraction

    @property
    def matrix(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        half = Fraction(1, 2)
        return ((half, self.a), (self.a, half))

    @property
    def det(self) -> Fraction:
        return Fraction(1, 4) - self.a * self.a

    @property
    def eigenvalues(self) -> tuple[Fraction, Fraction]:
        return (Fraction(1, 2) - abs(self.a), Fraction(1, 2) + abs(self.a))


@dataclass(frozen=True, eq=False)
class AmplitudeVector:
    n: int
    amps: np.ndarray

    def __post_init__(self) -> None:
        amps = _frozen(np.asarray(self.amps, dtype=np.complex128))
        if amps.shape != (1 << self.n,):
            raise ValueError(f"expected {1 << self.n} amplitudes, got shape {amps.shape}")
        norm = float(np.vdot(amps, amps).real)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"amplitudes not normalized: |psi|^2 = {norm!r}")
        object.__setattr__(self, "amps", amps)


def _check_size(n: int) -> None:
    if n > max_n():
        raise InfeasibleError(f"state vector for n = {n} exceeds MAX_N = {max_n()}")


def _gate_support(n: int, mask: int) -> np.ndarray:
    x = np.arange(1 << n, dtype=np.int64)
    return (x & mask) == mask


def apply_hyperedge_gate(sv: SignVector, mask: int) -> SignVector:
    """Apply ``Z_e``: negate every amplitude whose bits in ``e`` are all 1."""
    if mask < 0 or mask >> sv.n:
        raise HypergraphError(f"edge mask {mask:#b} has bits outside 1..{sv.n}")
    signs = sv.signs.copy()
    signs[_gate_support(sv.n, mask)] *= -1
    return SignVector(sv.n, signs)


def plus_state(n: int) -> SignVector:
    _check_size(n)
    return SignVector(n, np.ones(1 << n, dtype=np.int8))


def build_state(g: Hypergraph, order=None) -> SignVector:
    """``prod_{e in E} Z_e |+>^n``; ``order`` optionally fixes the gate sequence."""
    _check_size(g.n)
    edges = g.sorted_edges() if order is None else list(order)
    if set(edges) != g.edges or len(edges) != g.m:
        raise ValueError("order must be a permutation of the hypergraph's edges")
    sv = plus_state(g.n)
    for e in edges:
        sv = apply_hyperedge_gate(sv, e)
    return sv


def _split_on(n: int, t: int) -> tuple[np.ndarray, np.ndarray]:
    """Indices with qubit ``t`` equal to 0 and the partners with it equal to 1."""
    bit = 1 << (t - 1)
    x = np.arange(1 << n, dtype=np.int64)
    zeros = x[(x & bit) == 0]
    return zeros, zeros | bit


def reduced_density(sv: SignVector, t: int) -> ReducedDensity1Q:
    """Exact reduced state of qubit ``t``; ``a = (1/2**n) sum s(x, 0) s(x, 1)``."""
    check_vertex(sv.n, t)
    zeros, ones = _split_on(sv.n, t)
    total = int(np.dot(sv.signs[zeros].astype(np.int64), sv.signs[ones].astype(np.int64)))
    return ReducedDensity1Q(Fraction(total, 1 << sv.n))


def to_amplitudes(sv: SignVector) -> AmplitudeVector:
    return AmplitudeVector(sv.n, sv.signs.astype(np.complex128) / np.sqrt(1 << sv.n))


def is_unitary(u: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    u = np.asarray(u)
    return u.shape == (2, 2) and np.allclose(u @ u.conj().T, np.eye(2), atol=tol, rtol=0)


def _as_tensor(av: AmplitudeVector) -> np.ndarray:
    # C-order reshape puts qubit n on axis 0, so qubit t lives on axis n - t.
    return av.amps.reshape((2,) * av.n)


def apply_local_unitary(av: AmplitudeVector, t: int, u) -> AmplitudeVector:
    """Apply the 2x2 unitary ``u`` to qubit ``t`` and the identity elsewhere."""
    check_vertex(av.n, t)
    u = np.asarray(u, dtype=np.complex128)
    if not is_unitary(u):
        raise ValueError("u is not a 2x2 unitary within tolerance")
    axis = av.n - t
    psi = np.moveaxis(_as_tensor(av), axis, 0)
    psi = np.tensordot(u, psi, axes=([1], [0]))
    psi = np.moveaxis(psi, 0, axis)
    return AmplitudeVector(av.n, psi.reshape(-1))


def apply_local_unitaries(av: AmplitudeVector, unitaries) -> AmplitudeVector:
    """Apply ``U_1 ⊗ ... ⊗ U_n`` given as a sequence indexed by qubit - 1."""
    for t, u in enumerate(unitaries, start=1):
        av = apply_local_unitary(av, t, u)
    return av


def reduced_density_float(av: AmplitudeVector, t: int) -> np.ndarray:
    """Partial trace over every qubit except ``t``."""
    check_vertex(av.n, t)
    psi = np.moveaxis(_as_tensor(av), av.n - t, 0).reshape(2, -1)
    return psi @ psi.conj().T


def random_unitary(rng: np.random.Generator) -> np.ndarray:
    """Haar-random 2x2 unitary from the QR decomposition of a complex Gaussian."""
    z = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases
