"""Shannon quantities in bits and the closed-form bounds for 2-designs."""

from __future__ import annotations

from dataclasses import dataclass
from math import log, log2

import numpy as np

from .core import (
    Ensemble,
    JointDistribution,
    Povm,
    QuantumValidationError,
    _square,
    average_state,
    tolerances,
)

LN2 = log(2.0)


def _xlogx(p: np.ndarray) -> np.ndarray:
    """Elementwise ``p ln p`` with ``0 ln 0 = 0``."""
    p = np.asarray(p, dtype=float)
    out = np.zeros_like(p)
    pos = p > 0
    out[pos] = p[pos] * np.log(p[pos])
    return out


def entropy(p) -> float:
    """Shannon entropy in bits."""
    p = np.asarray(p, dtype=float).ravel()
    if np.any(p < -tolerances().prob_clamp):
        raise ValueError(f"negative probability {p.min():.3e}")
    if abs(p.sum() - 1.0) > tolerances().normalization:
        raise ValueError(f"probabilities sum to {p.sum()}, not 1")
    return max(0.0, float(-_xlogx(np.clip(p, 0, None)).sum() / LN2))


def joint_entropy(joint: JointDistribution) -> float:
    return entropy(joint.matrix)


def mutual_information(joint) -> float:
    """``I(X;Y) = H(X) + H(Y) - H(X,Y)`` in bits, clamped at zero."""
    if not isinstance(joint, JointDistribution):
        joint = JointDistribution.from_matrix(joint)
    p = joint.matrix
    if (np.max(np.abs(p.sum(axis=1) - joint.row_marginal)) > tolerances().normalization
            or np.max(np.abs(p.sum(axis=0) - joint.col_marginal)) > tolerances().normalization):
        raise ValueError("stored marginals do not match the joint table")
    value = entropy(joint.row_marginal) + entropy(joint.col_marginal) - entropy(p)
    if value < -1e-9:
        raise ArithmeticError(f"mutual information came out negative ({value:.3e})")
    return max(0.0, value)


def mutual_information_kl(joint: JointDistribution) -> float:
    """``sum p_xy log(p_xy / (p_x q_y))``, the relative-entropy form."""
    p = joint.matrix
    prod = np.outer(joint.row_marginal, joint.col_marginal)
    pos = p > 0
    return float(np.sum(p[pos] * np.log2(p[pos] / prod[pos])))


def _check_dim(d: int, minimum: int = 2):
    if int(d) != d or d < minimum:
        raise ValueError(f"dimension must be an integer >= {minimum}, got {d}")


def _purity_ratio(m: np.ndarray) -> float:
    tr = np.trace(m).real
    tr2 = np.trace(m @ m).real
    if tr <= 0:
        raise ValueError("operator has zero trace")
    return tr * tr / (tr * tr + tr2)


def ensemble_entropy_bound(effect, n: int, d: int) -> float:
    """Lower bound on the entropy of a uniform 2-design ensemble conditioned on ``effect``."""
    pi = _square(effect, "effect")
    if n < 1:
        raise ValueError("ensemble size must be positive")
    return log2(n * (d + 1) / d * _purity_ratio(pi))


def povm_entropy_bound(rho, n: int, d: int) -> float:
    """Lower bound on the outcome entropy of a uniform 2-design POVM on state ``rho``."""
    m = _square(rho, "state")
    if n < 1:
        raise ValueError("POVM size must be positive")
    return log2(n * (d + 1) / d * _purity_ratio(m))


def conditional_input_distribution(ensemble: Ensemble, effect) -> np.ndarray:
    """``p_{x|Pi} = d p_x <phi_x|Pi|phi_x> / Tr[Pi]`` for a 2-design ensemble."""
    pi = _square(effect, "effect")
    d = ensemble.dim
    vals = np.einsum("xij,ji->x", ensemble.states, pi).real
    return d * ensemble.weights * vals / np.trace(pi).real


def conditional_output_distribution(povm: Povm, rho) -> np.ndarray:
    """``q_{y|rho} = Tr[Pi_y rho] / Tr[rho]``."""
    m = _square(rho, "state")
    return np.einsum("yij,ji->y", povm.effects, m).real / np.trace(m).real


def collision_sum(ensemble: Ensemble, povm: Povm) -> float:
    """``sum p_x q_y d^2 |<phi_x|pi_y>|^4`` for a pure ensemble and rank-one POVM."""
    d = ensemble.dim
    tr = np.trace(povm.effects, axis1=1, axis2=2).real
    q = tr / d
    overlap = np.einsum("xij,yji->xy", ensemble.states, povm.effects).real / tr[None, :]
    return float(d * d * ensemble.weights @ overlap**2 @ q)


def accinfo_upper_bound(d: int) -> float:
    """Ceiling ``log(2d/(d+1))`` on the accessible information of any 2-design ensemble."""
    _check_dim(d)
    return log2(2 * d / (d + 1))


def infopower_upper_bound(d: int) -> float:
    """Same ceiling for the informational power of uniform 2-design POVMs."""
    _check_dim(d)
    return log2(2 * d / (d + 1))


def scrooge_bounds(d: int) -> tuple[float, float]:
    """Dimension-only (lower, upper) bounds on the informational power of rank-one POVMs."""
    _check_dim(d)
    harmonic = sum(1.0 / n for n in range(2, d + 1))
    return log2(d) - harmonic / LN2, log2(d)


def pretty_good_povm(ensemble: Ensemble) -> Povm:
    d = ensemble.dim
    if np.max(np.abs(average_state(ensemble).matrix - np.eye(d) / d)) > tolerances().completeness:
        raise QuantumValidationError("pretty-good POVM needs an ensemble averaging to 1/d")
    return Povm(d * ensemble.subnormalized())


def pretty_good_ensemble(povm: Povm) -> Ensemble:
    d = povm.dim
    tr = np.trace(povm.effects, axis1=1, axis2=2).real
    if abs(tr.sum() / d - 1.0) > tolerances().normalization:
        raise QuantumValidationError("POVM trace does not equal the dimension")
    keep = tr > tolerances().drop_weight
    return Ensemble.from_subnormalized(povm.effects[keep] / d)


def pg_sic_value(d: int) -> float:
    """Mutual information of a SIC ensemble measured by its pretty-good POVM."""
    _check_dim(d)
    return log2(d) - (d - 1) / d * log2(d + 1)


def pg_mub_value(d: int) -> float:
    """Mutual information of a maximal MUB ensemble measured by its pretty-good POVM."""
    _check_dim(d)
    return log2(d) / (d + 1)


def _check_sic_parameter(d: int, a: float, tol: float = 1e-12):
    _check_dim(d)
    if not 1 / d**3 - tol <= a <= 1 / d**2 + tol:
        raise ValueError(f"SIC purity parameter a={a} outside [1/d^3, 1/d^2]")


def _check_mub_parameter(d: int, k: float, tol: float = 1e-12):
    _check_dim(d)
    if not 1 / d - tol <= k <= 1 + tol:
        raise ValueError(f"MUB purity parameter k={k} outside [1/d, 1]")


def gen_sic_bound(d: int, a: float) -> float:
    _check_sic_parameter(d, a)
    return max(0.0, log2((d**3 * a + d) / (d + 1)))


def gen_mub_bound(d: int, k: float) -> float:
    _check_mub_parameter(d, k)
    return max(0.0, log2((d * k + d) / (d + 1)))


def gen_sic_conditional_entropy_bound(d: int, a: float) -> float:
    """Per-state lower bound on ``H(Y|X=x)`` for an arbitrary-rank SIC POVM."""
    _check_sic_parameter(d, a)
    return -log2((a * d**3 - a * d**2 + d - 1) / (d * (d * d - 1)))


def gen_mub_conditional_entropy_bound(d: int, k: float) -> float:
    _check_mub_parameter(d, k)
    return log2((d + 1) ** 2 / (k + 1))


def gen_conditional_entropy_bounds(d: int, *, a: float | None = None, k: float | None = None) -> float:
    if (a is None) == (k is None):
        raise ValueError("give exactly one of a (SIC) or k (MUB)")
    if a is not None:
        return gen_sic_conditional_entropy_bound(d, a)
    return gen_mub_conditional_entropy_bound(d, k)


@dataclass(frozen=True)
class BoundSet:
    d: int
    accinfo_upper: float
    infopower_upper: float
    scrooge_lower: float
    trivial_upper: float
    pg_sic: float
    pg_mub: float
    gen_sic: float | None = None
    gen_mub: float | None = None

    def as_rows(self) -> list[tuple[str, float]]:
        rows = [
            ("accinfo_upper", self.accinfo_upper),
            ("infopower_upper", self.infopower_upper),
            ("scrooge_lower", self.scrooge_lower),
            ("trivial_upper", self.trivial_upper),
            ("pg_sic", self.pg_sic),
            ("pg_mub", self.pg_mub),
        ]
        if self.gen_sic is not None:
            rows.append(("gen_sic", self.gen_sic))
        if self.gen_mub is not None:
            rows.append(("gen_mub", self.gen_mub))
        return rows


def bound_set(d: int, a: float | None = None, k: float | None = None) -> BoundSet:
    lower, upper = scrooge_bounds(d)
    return BoundSet(
        d=d,
        accinfo_upper=accinfo_upper_bound(d),
        infopower_upper=infopower_upper_bound(d),
        scrooge_lower=lower,
        trivial_upper=upper,
        pg_sic=pg_sic_value(d),
        pg_mub=pg_mub_value(d),
        gen_sic=None if a is None else gen_sic_bound(d, a),
        gen_mub=None if k is None else gen_mub_bound(d, k),
    )
