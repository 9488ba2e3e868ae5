"""Spherical 2-designs: SIC sets, maximal MUB sets and their mixed-state versions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import (
    DensityOperator,
    Ensemble,
    Povm,
    QuantumValidationError,
    _frozen,
    fix_phase,
    kron_power,
    symmetric_dimension,
    symmetric_projector,
    tolerances,
)

OVERLAP_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class WeightedStateSet:
    """Probability weights over pure states, stored as rows of ``vectors``.

    ``labels`` carries ``(basis, index)`` pairs for MUB sets and is ``None``
    otherwise.
    """

    weights: np.ndarray
    vectors: np.ndarray
    labels: Optional[np.ndarray] = None

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float).ravel()
        v = np.atleast_2d(np.asarray(self.vectors, dtype=complex))
        if w.shape[0] != v.shape[0]:
            raise QuantumValidationError("weights and vectors differ in length")
        if np.any(w <= 0):
            raise QuantumValidationError("weights must be positive")
        if abs(w.sum() - 1.0) > tolerances().normalization:
            raise QuantumValidationError(f"weights sum to {w.sum()}, not 1")
        norms = np.linalg.norm(v, axis=1)
        if np.max(np.abs(norms - 1.0)) > 1e-10:
            raise QuantumValidationError("state vectors must be normalized")
        object.__setattr__(self, "weights", _frozen(w))
        object.__setattr__(self, "vectors", _frozen(fix_phase(v)))
        if self.labels is not None:
            lab = np.asarray(self.labels, dtype=int).reshape(-1, 2)
            if lab.shape[0] != w.shape[0]:
                raise QuantumValidationError("one (basis, index) label per state is required")
            object.__setattr__(self, "labels", _frozen(lab))

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    def __len__(self) -> int:
        return self.weights.shape[0]

    @classmethod
    def uniform(cls, vectors, labels=None) -> "WeightedStateSet":
        v = np.atleast_2d(np.asarray(vectors, dtype=complex))
        return cls(np.full(v.shape[0], 1.0 / v.shape[0]), v, labels)

    def projectors(self) -> np.ndarray:
        return np.einsum("ni,nj->nij", self.vectors, self.vectors.conj())

    def overlaps(self) -> np.ndarray:
        """Table of ``|<phi_x|phi_x'>|^2``."""
        g = self.vectors.conj() @ self.vectors.T
        return np.abs(g) ** 2


@dataclass(frozen=True, eq=False)
class MixedStateSet:
    """Weighted mixed states; ``kind`` is ``"sic"`` or ``"mub"`` when built from one."""

    weights: np.ndarray
    states: np.ndarray
    kind: Optional[str] = None
    parameter: Optional[float] = None
    labels: Optional[np.ndarray] = None

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float).ravel()
        s = np.asarray(self.states, dtype=complex)
        if abs(w.sum() - 1.0) > tolerances().normalization:
            raise QuantumValidationError(f"weights sum to {w.sum()}, not 1")
        for rho in s:
            DensityOperator(rho)
        object.__setattr__(self, "weights", _frozen(w))
        object.__setattr__(self, "states", _frozen(s))
        if self.labels is not None:
            object.__setattr__(self, "labels", _frozen(np.asarray(self.labels, dtype=int)))

    @property
    def dim(self) -> int:
        return self.states.shape[1]

    def __len__(self) -> int:
        return self.weights.shape[0]


@dataclass(frozen=True)
class DesignReport:
    order_checked: int
    operator_deviation: float
    frame_potential: float
    frame_potential_target: float
    tolerance: float

    @property
    def verdict(self) -> bool:
        return self.operator_deviation <= self.tolerance


@dataclass(frozen=True)
class OverlapReport:
    kind: str
    max_deviation: float
    tolerance: float
    completeness_deviation: float = 0.0
    parameter: Optional[float] = None

    @property
    def passed(self) -> bool:
        return max(self.max_deviation, self.completeness_deviation) <= self.tolerance


def frame_potential(states: WeightedStateSet, s: int) -> float:
    """``sum p_x p_x' |<phi_x|phi_x'>|^(2s)``."""
    return float(states.weights @ states.overlaps() ** s @ states.weights)


def check_design(states: WeightedStateSet, s: int = 2, tol: float = OVERLAP_TOL) -> DesignReport:
    """Compare the ``s``-th moment operator of ``states`` with the Haar average."""
    if s not in (1, 2):
        raise ValueError(f"design order must be 1 or 2, got {s}")
    d = states.dim
    m = symmetric_dimension(d, s)
    tensors = kron_power(states.vectors, s)
    moment = np.einsum("n,ni,nj->ij", states.weights, tensors, tensors.conj())
    deviation = float(np.max(np.abs(moment - symmetric_projector(d, s) / m)))
    return DesignReport(s, deviation, frame_potential(states, s), 1.0 / m, tol)


def weyl_heisenberg_orbit(fiducial) -> WeightedStateSet:
    """The ``d^2`` states ``X^j Z^k |f>`` with uniform weights; SIC property not checked."""
    f = np.asarray(fiducial, dtype=complex).ravel()
    if abs(np.linalg.norm(f) - 1.0) > 1e-10:
        raise QuantumValidationError("fiducial must be normalized")
    d = f.shape[0]
    omega = np.exp(2j * np.pi / d)
    phases = omega ** np.arange(d)
    vectors = []
    for j in range(d):
        for k in range(d):
            vectors.append(np.roll(phases**k * f, j))
    return WeightedStateSet.uniform(vectors)


def qubit_sic_fiducial() -> np.ndarray:
    """Fiducial with Bloch vector (1, 1, 1)/sqrt(3)."""
    theta = np.arccos(1 / np.sqrt(3))
    return np.array([np.cos(theta / 2), np.exp(1j * np.pi / 4) * np.sin(theta / 2)])


def _qutrit_sic_vectors() -> np.ndarray:
    xi = np.exp(1j * np.pi / 3)
    xc = np.conj(xi)
    cols = np.array([
        [0, 0, 0, 1, 1, 1, -1, xi, xc],
        [-1, xi, xc, 0, 0, 0, 1, 1, 1],
        [1, 1, 1, -1, xi, xc, 0, 0, 0],
    ]) / np.sqrt(2)
    return cols.T


def builtin_sic(d: int) -> WeightedStateSet:
    if d == 2:
        return weyl_heisenberg_orbit(qubit_sic_fiducial())
    if d == 3:
        return WeightedStateSet.uniform(_qutrit_sic_vectors())
    raise ValueError(f"no builtin SIC for d={d}; load a fiducial or state-set file")


def _mub_labels(d: int) -> np.ndarray:
    return np.array([(b, x) for b in range(d + 1) for x in range(d)])


def builtin_mub(d: int) -> WeightedStateSet:
    """Maximal MUB set; bases are consecutive blocks of ``d`` states."""
    if d == 2:
        s = 1 / np.sqrt(2)
        vecs = np.array([[1, 0], [0, 1], [s, s], [s, -s], [s, 1j * s], [s, -1j * s]])
    elif d == 3:
        w = np.exp(2j * np.pi / 3)
        r = np.sqrt(3)
        vecs = np.array([
            [r, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1],
            [0, r, 0, 1, w, w**2, w, w**2, 1, w**2, w, 1],
            [0, 0, r, 1, w**2, w, w, 1, w**2, w**2, 1, w],
        ]).T / r
    elif d == 4:
        i = 1j
        first = np.array([
            [2, 0, 0, 0, 1, 1, 1, 1, 1, 1],
            [0, 2, 0, 0, 1, 1, -1, -1, -1, -1],
            [0, 0, 2, 0, 1, -1, -1, 1, -i, i],
            [0, 0, 0, 2, 1, -1, 1, -1, -i, i],
        ])
        second = np.array([
            [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
            [1, 1, -i, -i, i, i, -i, -i, i, i],
            [i, -i, -i, i, i, -i, -1, 1, -1, 1],
            [-i, i, -1, 1, -1, 1, -i, i, i, -i],
        ])
        vecs = np.hstack([first, second]).T / 2
    else:
        hint = " (no maximal MUB set is known for d=6)" if d == 6 else ""
        raise ValueError(f"no builtin MUB set for d={d}{hint}")
    return WeightedStateSet.uniform(vecs, _mub_labels(d))


def qutrit_sic_povm() -> Povm:
    """The SIC POVM that attains the accessible information of the qutrit MUB ensemble."""
    return as_povm(builtin_sic(3))


def ququart_witness_basis() -> np.ndarray:
    """Orthonormal basis (rows) reaching mutual information 3/5 with the d=4 MUB set."""
    r = 1 / np.sqrt(2)
    i = 1j
    cols = np.array([
        [r, 0.5, 0, 0.5],
        [i * r, -i / 2, 0, -i / 2],
        [0, -i / 2, i * r, i / 2],
        [0, 0.5, r, -0.5],
    ])
    return cols.T


def _sic_target(d: int, n: int) -> np.ndarray:
    return (d * np.eye(n) + 1) / (d + 1)


def _mub_target(d: int, labels: np.ndarray) -> np.ndarray:
    same_b = labels[:, 0][:, None] == labels[:, 0][None, :]
    same_x = labels[:, 1][:, None] == labels[:, 1][None, :]
    return np.where(same_b, (same_b & same_x).astype(float), 1.0 / d)


def validate_sic(states: WeightedStateSet, tol: float = OVERLAP_TOL) -> OverlapReport:
    d, n = states.dim, len(states)
    if n != d * d:
        raise ValueError(f"a SIC in d={d} has {d * d} states, got {n}")
    dev = np.max(np.abs(states.overlaps() - _sic_target(d, n)))
    dev = max(dev, float(np.max(np.abs(states.weights - 1.0 / n))))
    return OverlapReport("sic", float(dev), tol)


def validate_mub(states: WeightedStateSet, tol: float = OVERLAP_TOL) -> OverlapReport:
    d, n = states.dim, len(states)
    if n != d * (d + 1):
        raise ValueError(f"a maximal MUB set in d={d} has {d * (d + 1)} states, got {n}")
    if states.labels is None:
        raise ValueError("MUB validation needs (basis, index) labels")
    dev = np.max(np.abs(states.overlaps() - _mub_target(d, states.labels)))
    dev = max(dev, float(np.max(np.abs(states.weights - 1.0 / n))))
    return OverlapReport("mub", float(dev), tol)


def depolarize(states: WeightedStateSet, t: float, kind: Optional[str] = None) -> MixedStateSet:
    """Mix every state with white noise: ``t |phi><phi| + (1 - t) 1/d``.

    ``kind`` defaults to ``"mub"`` when the set carries labels and ``"sic"``
    otherwise.  The returned ``parameter`` is the SIC purity parameter
    ``Tr[rho^2]/d^2`` or the MUB parameter ``Tr[rho^2]``.
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"mixing parameter must lie in [0, 1], got {t}")
    if kind is None:
        kind = "mub" if states.labels is not None else "sic"
    d = states.dim
    mixed = t * states.projectors() + (1 - t) * np.eye(d) / d
    purity = t * t + (1 - t * t) / d
    parameter = purity / d**2 if kind == "sic" else purity
    return MixedStateSet(states.weights, mixed, kind, parameter, states.labels)


def _hs_gram(states: np.ndarray) -> np.ndarray:
    return np.einsum("aij,bji->ab", states, states).real


def validate_generalized_sic(states: MixedStateSet, tol: float = OVERLAP_TOL,
                             a: Optional[float] = None) -> OverlapReport:
    """Hilbert-Schmidt inner products and completeness of an arbitrary-rank SIC set.

    The purity parameter ``a`` is read from the first state when not given.
    """
    d, n = states.dim, len(states)
    if n != d * d:
        raise ValueError(f"an arbitrary-rank SIC in d={d} has {d * d} states, got {n}")
    gram = _hs_gram(states.states)
    if a is None:
        a = gram[0, 0] / d**2
    off = d * (1 - d * a) / (d * d - 1)
    target = np.where(np.eye(n, dtype=bool), d * d * a, off)
    dev = float(np.max(np.abs(gram - target)))
    dev = max(dev, float(np.max(np.abs(states.weights - 1.0 / n))))
    comp = float(np.max(np.abs(states.states.sum(axis=0) - d * np.eye(d))))
    in_range = 1 / d**3 - tol <= a <= 1 / d**2 + tol
    return OverlapReport("gen-sic", dev if in_range else np.inf, tol, comp, float(a))


def validate_generalized_mub(states: MixedStateSet, tol: float = OVERLAP_TOL,
                             k: Optional[float] = None) -> OverlapReport:
    d, n = states.dim, len(states)
    if n != d * (d + 1):
        raise ValueError(f"an arbitrary-rank MUB set in d={d} has {d * (d + 1)} states, got {n}")
    if states.labels is None:
        raise ValueError("MUB validation needs (basis, index) labels")
    gram = _hs_gram(states.states)
    if k is None:
        k = gram[0, 0]
    lab = states.labels
    same_b = lab[:, 0][:, None] == lab[:, 0][None, :]
    same = same_b & (lab[:, 1][:, None] == lab[:, 1][None, :])
    target = np.where(same, k, np.where(same_b, (1 - k) / (d - 1), 1.0 / d))
    dev = float(np.max(np.abs(gram - target)))
    dev = max(dev, float(np.max(np.abs(states.weights - 1.0 / n))))
    comp = float(np.max(np.abs(states.states.sum(axis=0) - (d + 1) * np.eye(d))))
    in_range = 1 / d - tol <= k <= 1 + tol
    return OverlapReport("gen-mub", dev if in_range else np.inf, tol, comp, float(k))


def as_ensemble(states) -> Ensemble:
    if isinstance(states, MixedStateSet):
        return Ensemble(states.weights, states.states)
    return Ensemble(states.weights, states.projectors())


def as_povm(states) -> Povm:
    """Rescale to effects ``d p_y rho_y``; fails unless the set averages to ``1/d``."""
    d = states.dim
    ops = states.states if isinstance(states, MixedStateSet) else states.projectors()
    effects = d * states.weights[:, None, None] * ops
    if np.max(np.abs(effects.sum(axis=0) - np.eye(d))) > tolerances().completeness:
        raise QuantumValidationError("state set is not a 1-design; rescaled effects do not sum to 1")
    return Povm(effects)


def states_from_ensemble(ensemble: Ensemble, labels=None) -> WeightedStateSet:
    """Recover pure-state vectors from a pure ensemble (leading eigenvectors)."""
    if not ensemble.is_pure():
        raise QuantumValidationError("ensemble contains mixed states")
    vecs = np.array([np.linalg.eigh(r)[1][:, -1] for r in ensemble.states])
    return WeightedStateSet(ensemble.weights, vecs, labels)


def states_from_povm(povm: Povm, labels=None) -> WeightedStateSet:
    """Weights ``Tr[Pi_y]/d`` and normalized directions of a rank-one POVM."""
    if not povm.is_rank_one():
        raise QuantumValidationError("POVM has elements of rank greater than one")
    tr = np.trace(povm.effects, axis1=1, axis2=2).real
    keep = tr > 1e-12
    vecs = np.array([np.linalg.eigh(e)[1][:, -1] for e in povm.effects[keep]])
    labels = None if labels is None else np.asarray(labels)[keep]
    return WeightedStateSet(tr[keep] / povm.dim, vecs, labels)


def is_two_design(states: WeightedStateSet, tol: float = OVERLAP_TOL) -> bool:
    return check_design(states, 1, tol).verdict and check_design(states, 2, tol).verdict


def ensemble_is_two_design(ensemble: Ensemble, tol: float = OVERLAP_TOL) -> bool:
    if not ensemble.is_pure():
        return False
    return is_two_design(states_from_ensemble(ensemble), tol)


def povm_is_two_design(povm: Povm, tol: float = OVERLAP_TOL) -> bool:
    if not povm.is_rank_one():
        return False
    return is_two_design(states_from_povm(povm), tol)
