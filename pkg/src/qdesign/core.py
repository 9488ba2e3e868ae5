"""Small-dimension Hermitian linear algebra and basic quantum objects.

States and effects are dense complex ``numpy`` arrays.  Ensembles store
explicit ``(weight, normalized state)`` pairs; POVMs store their effects
stacked along the first axis.  All containers are immutable after
construction.
"""

from __future__ import annotations

import contextlib
import dataclasses
from dataclasses import dataclass
from math import comb
from typing import Iterator, Union

import numpy as np


@dataclass(frozen=True)
class ToleranceConfig:
    hermitian: float = 1e-10
    psd: float = 1e-10
    trace: float = 1e-10
    normalization: float = 1e-9
    completeness: float = 1e-9
    prob_clamp: float = 1e-12
    sqrt_reject: float = 1e-8
    drop_weight: float = 1e-12


_TOL = ToleranceConfig()


def tolerances() -> ToleranceConfig:
    """Return the active global tolerances."""
    return _TOL


@contextlib.contextmanager
def override_tolerances(**changes: float) -> Iterator[ToleranceConfig]:
    """Temporarily replace fields of the global :class:`ToleranceConfig`."""
    global _TOL
    saved = _TOL
    _TOL = dataclasses.replace(saved, **changes)
    try:
        yield _TOL
    finally:
        _TOL = saved


class QuantumValidationError(ValueError):
    """An operator or collection violates a physical constraint."""


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


def _square(m, name: str) -> np.ndarray:
    m = np.asarray(getattr(m, "matrix", m), dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise QuantumValidationError(f"{name} must be a square matrix, got shape {m.shape}")
    return m


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(m, -1, -2))


def is_hermitian(m: np.ndarray, tol: float | None = None) -> bool:
    tol = _TOL.hermitian if tol is None else tol
    return bool(np.max(np.abs(m - dagger(m)), initial=0.0) <= tol)


def hermitian_eigh(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of the Hermitian part of ``m`` (ascending eigenvalues)."""
    m = np.asarray(m, dtype=complex)
    return np.linalg.eigh(0.5 * (m + dagger(m)))


def projector(vector) -> np.ndarray:
    """Rank-one projector onto ``vector`` (normalized first)."""
    v = np.asarray(vector, dtype=complex).ravel()
    v = v / np.linalg.norm(v)
    return np.outer(v, v.conj())


def fix_phase(vectors: np.ndarray) -> np.ndarray:
    """Rotate each row so its first non-negligible amplitude is real positive."""
    vectors = np.atleast_2d(np.asarray(vectors, dtype=complex)).copy()
    for row in vectors:
        nz = np.flatnonzero(np.abs(row) > 1e-12)
        if nz.size:
            row *= np.abs(row[nz[0]]) / row[nz[0]]
    return vectors


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Normalized quantum state: Hermitian, PSD, unit trace."""

    matrix: np.ndarray

    def __post_init__(self):
        m = _square(self.matrix, "density operator")
        if not is_hermitian(m):
            raise QuantumValidationError("density operator is not Hermitian")
        if np.linalg.eigvalsh(m).min() < -_TOL.psd:
            raise QuantumValidationError("density operator has a negative eigenvalue")
        if abs(np.trace(m).real - 1.0) > _TOL.trace:
            raise QuantumValidationError(f"density operator trace {np.trace(m).real} != 1")
        object.__setattr__(self, "matrix", _frozen(m))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def pure(cls, vector) -> "DensityOperator":
        return cls(projector(vector))

    def purity(self) -> float:
        return float(np.trace(self.matrix @ self.matrix).real)


@dataclass(frozen=True, eq=False)
class Effect:
    """Measurement element: Hermitian with spectrum in [0, 1]."""

    matrix: np.ndarray

    def __post_init__(self):
        m = _square(self.matrix, "effect")
        if not is_hermitian(m):
            raise QuantumValidationError("effect is not Hermitian")
        ev = np.linalg.eigvalsh(m)
        if ev.min() < -_TOL.psd or ev.max() > 1 + _TOL.psd:
            raise QuantumValidationError("effect eigenvalues leave [0, 1]")
        object.__setattr__(self, "matrix", _frozen(m))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def _stack(ops, name: str) -> np.ndarray:
    if isinstance(ops, np.ndarray) and ops.ndim == 3:
        arr = ops.astype(complex)
    else:
        arr = np.array([_square(o, name) for o in ops], dtype=complex)
    if arr.ndim != 3 or arr.shape[1] != arr.shape[2] or arr.shape[0] == 0:
        raise QuantumValidationError(f"{name}s must be a non-empty stack of square matrices")
    return arr


@dataclass(frozen=True, eq=False)
class Ensemble:
    """Weighted collection of normalized states.

    ``weights`` has shape ``(N,)`` and ``states`` shape ``(N, d, d)``.
    """

    weights: np.ndarray
    states: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float).ravel()
        s = _stack(self.states, "state")
        if w.shape[0] != s.shape[0]:
            raise QuantumValidationError("weights and states differ in length")
        if np.any(w <= 0) or np.any(w > 1 + _TOL.normalization):
            raise QuantumValidationError("ensemble weights must lie in (0, 1]")
        if abs(w.sum() - 1.0) > _TOL.normalization:
            raise QuantumValidationError(f"ensemble weights sum to {w.sum()}, not 1")
        for rho in s:
            DensityOperator(rho)
        object.__setattr__(self, "weights", _frozen(w))
        object.__setattr__(self, "states", _frozen(s))

    @property
    def dim(self) -> int:
        return self.states.shape[1]

    def __len__(self) -> int:
        return self.weights.shape[0]

    @property
    def elements(self) -> list[tuple[float, DensityOperator]]:
        return [(float(p), DensityOperator(r)) for p, r in zip(self.weights, self.states)]

    def subnormalized(self) -> np.ndarray:
        """Operators ``p_x rho_x`` (the ensemble as a set of subnormalized states)."""
        return self.weights[:, None, None] * self.states

    @classmethod
    def from_subnormalized(cls, ops) -> "Ensemble":
        ops = _stack(ops, "state")
        w = np.trace(ops, axis1=1, axis2=2).real
        return cls(w, ops / w[:, None, None])

    @classmethod
    def from_vectors(cls, weights, vectors) -> "Ensemble":
        vectors = np.atleast_2d(np.asarray(vectors, dtype=complex))
        return cls(weights, np.array([projector(v) for v in vectors]))

    def conjugated(self, unitary: np.ndarray) -> "Ensemble":
        return Ensemble(self.weights, unitary @ self.states @ dagger(unitary))

    def is_pure(self, tol: float = 1e-9) -> bool:
        purities = np.einsum("nij,nji->n", self.states, self.states).real
        return bool(np.all(np.abs(purities - 1.0) <= tol))


@dataclass(frozen=True, eq=False)
class Povm:
    """Effects ``(m, d, d)`` summing to the identity."""

    effects: np.ndarray

    def __post_init__(self):
        e = _stack(self.effects, "effect")
        for op in e:
            Effect(op)
        total = e.sum(axis=0)
        if np.max(np.abs(total - np.eye(e.shape[1]))) > _TOL.completeness:
            raise QuantumValidationError("POVM effects do not sum to the identity")
        object.__setattr__(self, "effects", _frozen(e))

    @property
    def dim(self) -> int:
        return self.effects.shape[1]

    def __len__(self) -> int:
        return self.effects.shape[0]

    @property
    def elements(self) -> list[Effect]:
        return [Effect(e) for e in self.effects]

    @classmethod
    def from_isometry(cls, isometry: np.ndarray) -> "Povm":
        """Rank-one POVM with ``Pi_y = row_y^dagger row_y`` for an ``m x d`` isometry."""
        a = np.asarray(isometry, dtype=complex)
        return cls(np.einsum("yi,yj->yij", a.conj(), a))

    @classmethod
    def from_basis(cls, vectors) -> "Povm":
        """Projective measurement onto the rows of ``vectors``."""
        vectors = np.atleast_2d(np.asarray(vectors, dtype=complex))
        return cls(np.array([projector(v) for v in vectors]))

    def conjugated(self, unitary: np.ndarray) -> "Povm":
        return Povm(unitary @ self.effects @ dagger(unitary))

    def is_rank_one(self, tol: float = 1e-9) -> bool:
        tr = np.trace(self.effects, axis1=1, axis2=2).real
        tr2 = np.einsum("nij,nji->n", self.effects, self.effects).real
        return bool(np.all(np.abs(tr2 - tr**2) <= tol))


@dataclass(frozen=True, eq=False)
class JointDistribution:
    """Born-rule table ``p[x, y]`` with its cached marginals."""

    matrix: np.ndarray
    row_marginal: np.ndarray
    col_marginal: np.ndarray

    @classmethod
    def from_matrix(cls, p) -> "JointDistribution":
        p = np.array(p, dtype=float)
        if p.ndim != 2:
            raise QuantumValidationError("joint distribution must be two-dimensional")
        if np.any(p < -_TOL.prob_clamp):
            raise QuantumValidationError(f"negative joint probability {p.min():.3e}")
        p[p < 0] = 0.0
        if abs(p.sum() - 1.0) > _TOL.normalization:
            raise QuantumValidationError(f"joint distribution sums to {p.sum()}")
        return cls(_frozen(p), _frozen(p.sum(axis=1)), _frozen(p.sum(axis=0)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape


OperatorLike = Union[np.ndarray, DensityOperator, Effect]


def born_statistics(ensemble: Ensemble, povm: Povm) -> JointDistribution:
    """Joint table ``p[x, y] = p_x Tr[rho_x Pi_y]``."""
    if ensemble.dim != povm.dim:
        raise QuantumValidationError(
            f"dimension mismatch: ensemble {ensemble.dim}, POVM {povm.dim}")
    table = np.einsum("xij,yji->xy", ensemble.states, povm.effects).real
    return JointDistribution.from_matrix(ensemble.weights[:, None] * table)


def average_state(ensemble: Ensemble) -> DensityOperator:
    return DensityOperator(np.einsum("x,xij->ij", ensemble.weights, ensemble.states))


def hermitian_sqrt(rho: OperatorLike) -> np.ndarray:
    """PSD square root; eigenvalues down to ``-sqrt_reject`` are clamped to zero."""
    m = _square(rho, "operator")
    vals, vecs = hermitian_eigh(m)
    if vals.min() < -_TOL.sqrt_reject:
        raise QuantumValidationError(
            f"operator is not positive semidefinite (eigenvalue {vals.min():.3e})")
    vals = np.sqrt(np.clip(vals, 0.0, None))
    return (vecs * vals) @ dagger(vecs)


def distorted_ensemble(povm: Povm, rho: OperatorLike) -> Ensemble:
    """Ensemble of the operators ``rho^1/2 Pi_y rho^1/2``; near-zero weights dropped."""
    m = _square(rho, "state")
    if m.shape[0] != povm.dim:
        raise QuantumValidationError(
            f"dimension mismatch: state {m.shape[0]}, POVM {povm.dim}")
    root = hermitian_sqrt(m)
    ops = root @ povm.effects @ root
    w = np.trace(ops, axis1=1, axis2=2).real
    keep = w >= _TOL.drop_weight
    w = w[keep]
    ops = ops[keep] / w[:, None, None]
    ops = 0.5 * (ops + dagger(ops))
    return Ensemble(w / w.sum(), ops)


def swap_operator(d: int) -> np.ndarray:
    """``S |i>|j> = |j>|i>`` on C^d (x) C^d."""
    s = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            s[j * d + i, i * d + j] = 1.0
    return s


def symmetric_projector(d: int, s: int) -> np.ndarray:
    """Projector onto the symmetric subspace of ``(C^d)^{(x) s}`` for ``s`` in {1, 2}."""
    if s == 1:
        return np.eye(d, dtype=complex)
    if s == 2:
        return 0.5 * (np.eye(d * d, dtype=complex) + swap_operator(d))
    raise ValueError(f"only s in {{1, 2}} is supported, got {s}")


def symmetric_dimension(d: int, s: int) -> int:
    return comb(s + d - 1, s)


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary via QR of a complex Ginibre matrix."""
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diag(r) / np.abs(np.diag(r))
    return q * ph


def random_pure_states(n: int, d: int, rng: np.random.Generator) -> np.ndarray:
    """``n`` Haar-random unit vectors as rows of an ``(n, d)`` array."""
    z = rng.standard_normal((n, d)) + 1j * rng.standard_normal((n, d))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def random_isometry(m: int, d: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.standard_normal((m, d)) + 1j * rng.standard_normal((m, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_density(d: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    rank = d if rank is None else rank
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    rho = g @ dagger(g)
    return rho / np.trace(rho).real


def kron_power(vectors: np.ndarray, s: int) -> np.ndarray:
    """Row-wise ``s``-fold tensor power of a stack of vectors."""
    out = vectors
    for _ in range(s - 1):
        out = np.einsum("ni,nj->nij", out, vectors).reshape(vectors.shape[0], -1)
    return out
