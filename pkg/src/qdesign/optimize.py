"""Numerical accessible information and informational power.

Accessible information is maximized over rank-one POVMs encoded as
``m x d`` isometries ``A`` (``Pi_y = row_y^dagger row_y``), so completeness
holds at every iterate.  The ascent is Riemannian: Euclidean gradient,
tangent projection, thin-QR retraction, Armijo backtracking.

Informational power alternates Blahut-Arimoto weight updates with gradient
steps of the candidate pure states on the unit sphere.  A third route goes
through the distorted-ensemble duality and serves as a cross-check.

Gradients are Wirtinger gradients ``df/dRe(z) + i df/dIm(z)`` of real
objectives of complex arguments.
"""

from __future__ import annotations

import dataclasses
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from .core import (
    Ensemble,
    Povm,
    dagger,
    distorted_ensemble,
    hermitian_sqrt,
    random_isometry,
    random_pure_states,
)
from .info import LN2, accinfo_upper_bound, infopower_upper_bound, scrooge_bounds

log = logging.getLogger(__name__)

_TINY = 1e-300


@dataclass(frozen=True)
class OptimizerConfig:
    restarts: int = 32
    outcome_range: Optional[tuple[int, int]] = None
    max_iters: int = 5000
    initial_step: float = 1.0
    shrink: float = 0.5
    armijo: float = 1e-4
    max_backtracks: int = 60
    step_rule: str = "bb"
    grad_tol: float = 1e-8
    value_tol: float = 1e-10
    seed: int = 0
    allow_large_outcomes: bool = False
    workers: Optional[int] = None
    # informational power
    extra_candidates: int = 4
    ba_steps: int = 50
    prune_below: float = 1e-10
    certificate_tol: float = 1e-9
    certificate_accept: float = 1e-6
    # duality route
    duality_starts: int = 3
    duality_iters: int = 30
    duality_inner_restarts: int = 4

    def outcomes_for(self, d: int) -> range:
        lo, hi = self.outcome_range or (d, d * d)
        if lo < d:
            raise ValueError(f"a rank-one POVM on C^{d} needs at least {d} outcomes")
        if hi > d * d and not self.allow_large_outcomes:
            raise ValueError(f"outcome count {hi} exceeds d^2={d * d}; set allow_large_outcomes")
        return range(lo, hi + 1)

    def n_workers(self) -> int:
        if self.workers is not None:
            return max(1, self.workers)
        return max(1, int(os.environ.get("QDESIGN_THREADS", "1")))


@dataclass
class OptimizationResult:
    value: float
    maximizer: object
    bound: float
    bound_gap: float
    trace: np.ndarray
    converged: bool
    restarts_agreeing: int
    best_restart: int = 0
    seed: int = 0
    point: Optional[np.ndarray] = None
    details: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# objectives


def _factor(ops: np.ndarray, weights: Optional[np.ndarray] = None,
            cutoff: float = 1e-13) -> tuple[np.ndarray, np.ndarray]:
    """Split each PSD operator ``w_n O_n`` into vectors with ``sum_k u_k u_k^dagger = w_n O_n``.

    Returns the stacked vectors ``(K, d)`` and the owner index of each one.
    """
    vecs, owner = [], []
    for n, op in enumerate(ops):
        vals, v = np.linalg.eigh(0.5 * (op + op.conj().T))
        scale = 1.0 if weights is None else weights[n]
        for lam, col in zip(vals, v.T):
            if lam * scale > cutoff:
                vecs.append(np.sqrt(lam * scale) * col)
                owner.append(n)
    return np.array(vecs, dtype=complex), np.array(owner, dtype=int)


def _mi_and_score(p: np.ndarray) -> tuple[float, np.ndarray]:
    """Mutual information (nats) of an unnormalized-safe joint table and ``dI/dp``."""
    px = p.sum(axis=1, keepdims=True)
    qy = p.sum(axis=0, keepdims=True)
    ratio = np.log(np.maximum(p, _TINY)) - np.log(np.maximum(px * qy, _TINY))
    ratio = np.where(p > 0, ratio, 0.0)
    value = float(np.sum(p * ratio))
    # d/dp of sum p ln p - sum px ln px - sum qy ln qy
    score = ratio - 1.0
    return value, score


class AccessibleInfoObjective:
    """``A -> I(E, P(A))`` in bits for an ``m x d`` matrix ``A`` of POVM rows."""

    def __init__(self, ensemble: Ensemble):
        self.ensemble = ensemble
        self.vectors, self.owner = _factor(ensemble.states, ensemble.weights)
        self.n = len(ensemble)
        self._gather = np.zeros((self.n, self.vectors.shape[0]))
        self._gather[self.owner, np.arange(self.owner.size)] = 1.0

    def joint(self, a: np.ndarray) -> np.ndarray:
        z = a @ self.vectors.T
        return self._gather @ (np.abs(z) ** 2).T

    def value(self, a: np.ndarray) -> float:
        return _mi_and_score(self.joint(a))[0] / LN2

    def value_and_grad(self, a: np.ndarray) -> tuple[float, np.ndarray]:
        z = a @ self.vectors.T
        p = self._gather @ (np.abs(z) ** 2).T
        val, score = _mi_and_score(p)
        w = score[self.owner].T * z
        grad = 2.0 * w @ self.vectors.conj()
        return val / LN2, grad / LN2


class StateObjective:
    """Mutual information as a function of pure input states, weights held fixed."""

    def __init__(self, povm: Povm, weights: np.ndarray):
        self.povm = povm
        self.weights = np.asarray(weights, dtype=float)
        self.vectors, self.owner = _factor(povm.effects)
        m = len(povm)
        self._gather = np.zeros((self.vectors.shape[0], m))
        self._gather[np.arange(self.owner.size), self.owner] = 1.0

    def channel(self, phi: np.ndarray) -> np.ndarray:
        """Row-stochastic ``P(y|x) = <phi_x|Pi_y|phi_x>``."""
        z = phi.conj() @ self.vectors.T
        return (np.abs(z) ** 2) @ self._gather

    def value_and_grad(self, phi: np.ndarray) -> tuple[float, np.ndarray]:
        z = self.vectors.conj() @ phi.T  # (K, X): <u_k|phi_x>
        ch = ((np.abs(z) ** 2).T) @ self._gather
        p = self.weights[:, None] * ch
        val, score = _mi_and_score(p)
        # p_xy depends on phi_x only through the channel row
        coef = (self.weights[:, None] * score)[:, self.owner]  # (X, K)
        grad = 2.0 * (coef * z.T) @ self.vectors
        return val / LN2, grad / LN2

    def value(self, phi: np.ndarray) -> float:
        return self.value_and_grad(phi)[0]


class WeightObjective:
    """Mutual information of a fixed classical channel as a function of input weights."""

    def __init__(self, channel: np.ndarray):
        self.channel = np.asarray(channel, dtype=float)

    def value_and_grad(self, p: np.ndarray) -> tuple[float, np.ndarray]:
        joint = p[:, None] * self.channel
        val, score = _mi_and_score(joint)
        grad = np.sum(score * self.channel, axis=1)
        return val / LN2, grad / LN2

    def value(self, p: np.ndarray) -> float:
        return self.value_and_grad(p)[0]


class DualityObjective:
    """``B -> I({B Pi_y B^dagger / Tr[B^dagger B]}, P(A))`` with the POVM rows ``A`` held fixed."""

    def __init__(self, povm: Povm, rows: np.ndarray):
        self.povm = povm
        self.rows = np.asarray(rows, dtype=complex)
        self.vectors, self.owner = _factor(povm.effects)
        self._gather = np.zeros((len(povm), self.vectors.shape[0]))
        self._gather[self.owner, np.arange(self.owner.size)] = 1.0

    def value_and_grad(self, b: np.ndarray) -> tuple[float, np.ndarray]:
        s = float(np.sum(np.abs(b) ** 2))
        z = self.rows @ b @ self.vectors.T  # (m, K)
        r = self._gather @ (np.abs(z) ** 2).T  # (Y, m)
        val, score = _mi_and_score(r / s)
        w = score[self.owner].T * z  # (m, K)
        d_num = self.rows.conj().T @ w @ self.vectors.conj()
        grad = 2.0 * (d_num / s - np.sum(score * r) / s**2 * b)
        return val / LN2, grad / LN2

    def value(self, b: np.ndarray) -> float:
        return self.value_and_grad(b)[0]


# ---------------------------------------------------------------------------
# gradient checking


def gradient_check(objective: Callable[[np.ndarray], tuple[float, np.ndarray]],
                   point: np.ndarray, eps: float = 1e-5) -> float:
    """Max relative error between the analytic gradient and central differences.

    ``objective`` returns ``(value, gradient)``; for complex points the
    gradient is compared as ``df/dRe + i df/dIm`` coordinate by coordinate.
    """
    point = np.asarray(point)
    _, grad = objective(point)
    grad = np.asarray(grad)
    fd = np.zeros_like(grad)
    flat = point.ravel()
    directions = [1.0] + ([1j] if np.iscomplexobj(point) else [])
    for idx in range(flat.size):
        for unit in directions:
            step = np.zeros_like(flat)
            step[idx] = eps * unit
            hi = objective((flat + step).reshape(point.shape))[0]
            lo = objective((flat - step).reshape(point.shape))[0]
            fd.flat[idx] += unit * (hi - lo) / (2 * eps)
    scale = max(np.max(np.abs(fd)), 1e-12)
    return float(np.max(np.abs(grad - fd)) / scale)


# ---------------------------------------------------------------------------
# Stiefel ascent


def _qr_retract(x: np.ndarray) -> np.ndarray:
    q, r = np.linalg.qr(x)
    d = np.diag(r)
    ph = np.where(np.abs(d) > 0, d / np.maximum(np.abs(d), _TINY), 1.0)
    return q * ph


def _stiefel_tangent(a: np.ndarray, g: np.ndarray) -> np.ndarray:
    h = dagger(a) @ g
    return g - a @ (0.5 * (h + dagger(h)))


def _sphere_tangent(phi: np.ndarray, g: np.ndarray) -> np.ndarray:
    return g - np.real(np.sum(phi.conj() * g, axis=1, keepdims=True)) * phi


def _sphere_retract(x: np.ndarray) -> np.ndarray:
    return x / np.linalg.norm(x, axis=1, keepdims=True)


@dataclass
class _Ascent:
    point: np.ndarray
    value: float
    trace: list
    converged: bool
    grad_norm: float


def _riemannian_ascent(fg, point, tangent, retract, cfg: OptimizerConfig,
                       max_iters: Optional[int] = None) -> _Ascent:
    """Armijo-backtracked Riemannian gradient ascent.

    With ``cfg.step_rule == "bb"`` the first trial step of each line search is
    the Barzilai-Borwein length (tangent vectors compared without transport);
    otherwise every search starts from ``cfg.initial_step``.
    """
    max_iters = cfg.max_iters if max_iters is None else max_iters
    val, g = fg(point)
    trace = [val]
    xi = tangent(point, g)
    gnorm2 = float(np.real(np.vdot(xi, xi)))
    prev = None
    converged = False
    for _ in range(max_iters):
        if np.sqrt(gnorm2) < cfg.grad_tol:
            converged = True
            break
        t = cfg.initial_step
        if cfg.step_rule == "bb" and prev is not None:
            s = point - prev[0]
            y = prev[1] - xi
            sy = float(np.real(np.vdot(s, y)))
            if sy > 0:
                t = min(max(float(np.real(np.vdot(s, s))) / sy, 1e-6), 1e6)
        for _ in range(cfg.max_backtracks):
            cand = retract(point + t * xi)
            cval, cg = fg(cand)
            if cval >= val + cfg.armijo * t * gnorm2:
                break
            t *= cfg.shrink
        else:
            converged = True  # no ascent left at working precision
            break
        gain = cval - val
        prev = (point, xi)
        point, val, g = cand, cval, cg
        trace.append(val)
        xi = tangent(point, g)
        gnorm2 = float(np.real(np.vdot(xi, xi)))
        if gain < cfg.value_tol:
            converged = True
            break
    return _Ascent(point, val, trace, converged, float(np.sqrt(gnorm2)))


def ascend_isometry(objective: AccessibleInfoObjective, a0: np.ndarray,
                    cfg: OptimizerConfig, max_iters: Optional[int] = None) -> _Ascent:
    return _riemannian_ascent(objective.value_and_grad, a0, _stiefel_tangent,
                              _qr_retract, cfg, max_iters)


# ---------------------------------------------------------------------------
# multistart plumbing


def _spawn(seed: int, n: int) -> list[np.random.Generator]:
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(n)]


def _run_tasks(fn, tasks: Sequence, workers: int) -> list:
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def _pick_best(values: Sequence[float]) -> int:
    """Highest value; ties within 1e-9 go to the lowest index."""
    best = 0
    for i, v in enumerate(values):
        if v > values[best] + 1e-9:
            best = i
    return best


def _accinfo_task(args):
    ensemble, a0, cfg = args
    return ascend_isometry(AccessibleInfoObjective(ensemble), a0, cfg)


def _design_ceiling_ensemble(ensemble: Ensemble) -> float:
    from .designs import ensemble_is_two_design

    d = ensemble.dim
    if ensemble_is_two_design(ensemble, tol=1e-8):
        return accinfo_upper_bound(d)
    return float(np.log2(d))


def _design_ceiling_povm(povm: Povm) -> float:
    from .designs import states_from_povm, is_two_design

    d = povm.dim
    if povm.is_rank_one():
        states = states_from_povm(povm)
        uniform = np.allclose(states.weights, states.weights[0], atol=1e-12)
        if uniform and is_two_design(states, tol=1e-8):
            return infopower_upper_bound(d)
    return float(np.log2(d))


def maximize_accessible_info(ensemble: Ensemble, cfg: OptimizerConfig = OptimizerConfig(),
                             initial: Optional[Sequence[np.ndarray]] = None) -> OptimizationResult:
    """Multistart maximization of ``I(E, P)`` over rank-one POVMs.

    ``cfg.restarts`` random isometries are drawn for every outcome count in
    the configured range; ``initial`` isometries, when given, run first.
    """
    d = ensemble.dim
    starts: list[np.ndarray] = [np.asarray(a, dtype=complex) for a in (initial or [])]
    outcome_counts = list(cfg.outcomes_for(d))
    rngs = _spawn(cfg.seed, cfg.restarts * len(outcome_counts))
    i = 0
    for m in outcome_counts:
        for _ in range(cfg.restarts):
            starts.append(random_isometry(m, d, rngs[i]))
            i += 1
    if not starts:
        raise ValueError("no starting points: restarts=0 and no initial isometry")
    runs = _run_tasks(_accinfo_task, [(ensemble, a, cfg) for a in starts], cfg.n_workers())
    values = [r.value for r in runs]
    best = _pick_best(values)
    run = runs[best]
    bound = _design_ceiling_ensemble(ensemble)
    agreeing = sum(1 for v in values if v >= values[best] - 1e-6)
    return OptimizationResult(
        value=max(0.0, run.value),
        maximizer=Povm.from_isometry(run.point),
        bound=bound,
        bound_gap=run.value - bound,
        trace=np.array(run.trace),
        converged=run.converged,
        restarts_agreeing=agreeing,
        best_restart=best,
        seed=cfg.seed,
        point=run.point,
        details={"grad_norm": run.grad_norm, "outcomes": run.point.shape[0],
                 "values": np.array(values)},
    )


# ---------------------------------------------------------------------------
# informational power: Blahut-Arimoto + sphere ascent


def _divergences(channel: np.ndarray, p: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-input relative entropy (bits) to the output marginal, and that marginal."""
    q = p @ channel
    ratio = np.where(channel > 0,
                     np.log(np.maximum(channel, _TINY)) - np.log(np.maximum(q, _TINY))[None, :],
                     0.0)
    return np.sum(channel * ratio, axis=1) / LN2, q


def _ba_weights(channel: np.ndarray, p: np.ndarray, steps: int) -> np.ndarray:
    """Blahut-Arimoto fixed-point updates ``p_x <- p_x 2^{D_x} / Z``."""
    for _ in range(steps):
        dx, _ = _divergences(channel, p)
        w = p * np.exp2(dx - dx.max())
        p = w / w.sum()
    return p


class DivergenceObjective:
    """Sum over rows of ``D(P(.|phi) || q)`` in bits for a fixed output marginal ``q``."""

    def __init__(self, povm: Povm, q: np.ndarray):
        self.vectors, self.owner = _factor(povm.effects)
        self._gather = np.zeros((self.vectors.shape[0], len(povm)))
        self._gather[np.arange(self.owner.size), self.owner] = 1.0
        self.logq = np.log(np.maximum(q, _TINY))

    def rows(self, phi: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        z = self.vectors.conj() @ phi.T
        ch = (np.abs(z) ** 2).T @ self._gather
        ratio = np.where(ch > 0, np.log(np.maximum(ch, _TINY)) - self.logq, 0.0)
        return np.sum(ch * ratio, axis=1) / LN2, ratio, z

    def value_and_grad(self, phi: np.ndarray) -> tuple[float, np.ndarray]:
        vals, ratio, z = self.rows(phi)
        coef = (ratio + 1.0)[:, self.owner]
        grad = 2.0 * (coef * z.T) @ self.vectors
        return float(vals.sum()), grad / LN2


def most_informative_state(povm: Povm, q: np.ndarray, starts: np.ndarray,
                           cfg: OptimizerConfig) -> tuple[np.ndarray, float]:
    """Pure state maximizing the divergence of its outcome distribution from ``q``.

    By concavity of mutual information in the input distribution, an
    ensemble is optimal exactly when no state beats its value here.
    """
    obj = DivergenceObjective(povm, q)
    run = _riemannian_ascent(obj.value_and_grad, _sphere_retract(starts), _sphere_tangent,
                             _sphere_retract, dataclasses.replace(cfg, max_iters=500))
    vals, _, _ = obj.rows(run.point)
    i = int(np.argmax(vals))
    return run.point[i], float(vals[i])


def _mix_in(channel: np.ndarray, p: np.ndarray, row: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Add an input with the weight maximizing the (concave) mutual information."""
    ext = np.vstack([channel, row])

    def neg(lam):
        w = np.append((1 - lam) * p, lam)
        return -WeightObjective(ext).value(w)

    lam = minimize_scalar(neg, bounds=(0.0, 1.0), method="bounded",
                          options={"xatol": 1e-12}).x
    return ext, np.append((1 - lam) * p, lam)


@dataclass
class _PowerRun:
    states: np.ndarray
    weights: np.ndarray
    value: float
    trace: list
    converged: bool
    certificate_gap: float
    oracle_gap: float


def _oracle_starts(povm: Povm, phi: np.ndarray, rng: np.random.Generator, n_random: int) -> np.ndarray:
    eig = [np.linalg.eigh(e)[1] for e in povm.effects]
    top = np.array([v[:, -1] for v in eig])
    bottom = np.array([v[:, 0] for v in eig])
    return np.vstack([phi, top, bottom, random_pure_states(n_random, povm.dim, rng)])


def _power_task(args) -> _PowerRun:
    povm, phi, cfg, seed = args
    rng = np.random.default_rng(seed)
    d = povm.dim
    cap = 2 * (d * d + cfg.extra_candidates)
    p = np.full(phi.shape[0], 1.0 / phi.shape[0])
    obj = StateObjective(povm, p)
    value = WeightObjective(obj.channel(phi)).value(p)
    trace = [value]
    one_step = dataclasses.replace(cfg, max_iters=1, grad_tol=0.0, value_tol=-np.inf,
                                   step_rule="fixed")
    converged = False
    stall = 0
    oracle_gap = np.inf
    for _ in range(cfg.max_iters):
        channel = obj.channel(phi)
        p = _ba_weights(channel, p, cfg.ba_steps)
        keep = p >= cfg.prune_below
        if not keep.all():
            trial = p[keep] / p[keep].sum()
            if WeightObjective(channel[keep]).value(trial) >= WeightObjective(channel).value(p):
                phi, p = phi[keep], trial
        obj = StateObjective(povm, p)
        run = _riemannian_ascent(obj.value_and_grad, phi, _sphere_tangent, _sphere_retract, one_step)
        phi = run.point
        gain = run.value - value
        value = run.value
        trace.append(value)
        stall = stall + 1 if gain < cfg.value_tol else 0
        if stall < 3:
            continue
        # stalled: ask for the globally most informative new input
        channel = obj.channel(phi)
        _, q = _divergences(channel, p)
        starts = _oracle_starts(povm, phi, rng, 8)
        best_phi, best_d = most_informative_state(povm, q, starts, cfg)
        oracle_gap = best_d - value
        if oracle_gap <= cfg.certificate_tol:
            converged = True
            break
        new_row = obj.channel(best_phi[None, :])[0]
        _, p_new = _mix_in(channel, p, new_row)
        phi = np.vstack([phi, best_phi])
        p = p_new
        if phi.shape[0] > cap:
            drop = int(np.argmin(p))
            phi, p = np.delete(phi, drop, axis=0), np.delete(p, drop)
            p = p / p.sum()
        obj = StateObjective(povm, p)
        new_value = WeightObjective(obj.channel(phi)).value(p)
        if new_value > value:
            value = new_value
            trace.append(value)
            stall = 0
        else:
            # mixing gained nothing at machine precision
            converged = oracle_gap <= cfg.certificate_accept
            break
    dx, _ = _divergences(obj.channel(phi), p)
    return _PowerRun(phi, p, value, trace, converged, float(dx.max() - value), float(oracle_gap))


def _power_starts(povm: Povm, cfg: OptimizerConfig) -> list[np.ndarray]:
    d = povm.dim
    k = d * d + cfg.extra_candidates
    eig = np.array([np.linalg.eigh(e)[1][:, -1] for e in povm.effects])
    rngs = _spawn(cfg.seed, max(cfg.restarts, 1))
    starts = []
    for r, rng in enumerate(rngs):
        n_seed = 0 if r % 2 else min(len(eig), k // 2)
        seeds = eig[rng.permutation(len(eig))[:n_seed]]
        rand = random_pure_states(k - n_seed, d, rng)
        starts.append(np.vstack([seeds, rand]) if n_seed else rand)
    return starts


def maximize_informational_power(povm: Povm, cfg: OptimizerConfig = OptimizerConfig()) -> OptimizationResult:
    """Multistart maximization of ``I(E, P)`` over ensembles of pure states.

    ``details["certificate_gap"]`` is ``max_x D_x - value`` over the final
    candidates (zero at a capacity-achieving weight vector);
    ``details["oracle_gap"]`` is the same with the max taken over all pure
    states found by multistart search.
    """
    starts = _power_starts(povm, cfg)
    seeds = np.random.SeedSequence(cfg.seed + 1).generate_state(len(starts))
    runs = _run_tasks(_power_task, [(povm, s, cfg, int(sd)) for s, sd in zip(starts, seeds)],
                      cfg.n_workers())
    values = [r.value for r in runs]
    best = _pick_best(values)
    run = runs[best]
    bound = _design_ceiling_povm(povm)
    ensemble = Ensemble.from_vectors(run.weights / run.weights.sum(), run.states)
    return OptimizationResult(
        value=max(0.0, run.value),
        maximizer=ensemble,
        bound=bound,
        bound_gap=run.value - bound,
        trace=np.array(run.trace),
        converged=run.converged,
        restarts_agreeing=sum(1 for v in values if v >= values[best] - 1e-6),
        best_restart=best,
        seed=cfg.seed,
        point=run.states,
        details={"certificate_gap": run.certificate_gap, "oracle_gap": run.oracle_gap,
                 "upper_estimate": run.value + max(run.oracle_gap, 0.0),
                 "values": np.array(values), "scrooge_lower": scrooge_bounds(povm.dim)[0]},
    )


# ---------------------------------------------------------------------------
# informational power through the duality with accessible information


def _polar(b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """``B = U H`` with ``U`` unitary and ``H = (B^dagger B)^1/2``."""
    u, s, vh = np.linalg.svd(b)
    return u @ vh, dagger(vh) @ np.diag(s) @ vh


def infopower_via_duality(povm: Povm, cfg: OptimizerConfig = OptimizerConfig()) -> OptimizationResult:
    """Informational power as ``sup_rho A({rho^1/2 Pi_y rho^1/2})``.

    Outer block ascent over ``rho = B^dagger B / Tr[B^dagger B]``; each outer
    step re-solves the inner accessible-information problem on the distorted
    ensemble, warm-started from the previous POVM.
    """
    d = povm.dim
    rngs = _spawn(cfg.seed + 7919, max(cfg.duality_starts, 1))
    rho_starts = [np.eye(d) / d]
    for rng in rngs[1:]:
        g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
        rho_starts.append(g.conj().T @ g / np.sum(np.abs(g) ** 2))
    warm_cfg = dataclasses.replace(cfg, restarts=0, workers=1)
    probe_cfg = dataclasses.replace(cfg, restarts=cfg.duality_inner_restarts)
    step_cfg = dataclasses.replace(cfg, max_iters=25)
    best = None
    for start_idx, rho in enumerate(rho_starts):
        inner = maximize_accessible_info(distorted_ensemble(povm, rho),
                                         cfg if start_idx == 0 else probe_cfg)
        rows, value = inner.point, inner.value
        trace = [value]
        converged = False
        for _ in range(cfg.duality_iters):
            b = hermitian_sqrt(rho)
            obj = DualityObjective(povm, rows)
            run = _riemannian_ascent(obj.value_and_grad, b, lambda x, g: g,
                                     lambda x: x / np.linalg.norm(x), step_cfg)
            u, h = _polar(run.point)
            rho = h @ h
            rho = 0.5 * (rho + dagger(rho)) / np.trace(rho).real
            inner = maximize_accessible_info(distorted_ensemble(povm, rho), warm_cfg,
                                             initial=[rows @ u])
            gain = inner.value - value
            rows, value = inner.point, max(value, inner.value)
            trace.append(value)
            if gain < 1e-9:
                converged = True
                break
        if best is None or value > best[0] + 1e-9:
            best = (value, rho, rows, trace, converged, start_idx)
    value, rho, rows, trace, converged, start_idx = best
    bound = _design_ceiling_povm(povm)
    return OptimizationResult(
        value=value,
        maximizer=distorted_ensemble(povm, rho),
        bound=bound,
        bound_gap=value - bound,
        trace=np.array(trace),
        converged=converged,
        restarts_agreeing=1,
        best_restart=start_idx,
        seed=cfg.seed,
        point=rows,
        details={"rho": rho},
    )
