"""Differentiable macroscale search via a softmax-relaxed assignment.

The hard partition is relaxed to a row-stochastic membership matrix
M = softmax(logits): entry (i, mu) is the probability that micro-node i
belongs to macro slot mu. The soft macro transition matrix generalizes the
stationary-weighted macro-node construction and reduces to it exactly at
one-hot M, so hardened results score consistently with coarse_grain.
Effective information of that matrix is ascended with momentum, restarting
from several random initializations; the best hardened partition wins.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coarse import MacroResult, Partition, causal_emergence, coarse_grain
from .ei import effective_information, shannon_entropy
from .network import Network, StationaryDistribution, normalize, stationary

DEFAULT_MASS_TOL = 1e-6
# Convergence is judged on the EI change across this many iterations.
CONVERGENCE_WINDOW = 50
# The landscape is nearly flat around the near-uniform initialization, so
# the window test only starts once the ascent has had time to leave it.
CONVERGENCE_WARMUP = 300


def _softmax_rows(logits: np.ndarray) -> np.ndarray:
    z = logits - logits.max(axis=1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=1, keepdims=True)


@dataclass(frozen=True, eq=False)
class SoftAssignment:
    """Unconstrained logits with their row-softmax membership probabilities."""

    logits: np.ndarray
    probs: np.ndarray = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        logits = np.array(self.logits, dtype=float)
        if logits.ndim != 2 or logits.shape[0] != logits.shape[1]:
            raise ValueError(f"logits must be square, got shape {logits.shape}")
        if not np.all(np.isfinite(logits)):
            raise ValueError("logits must be finite")
        probs = _softmax_rows(logits)
        logits.setflags(write=False)
        probs.setflags(write=False)
        object.__setattr__(self, "logits", logits)
        object.__setattr__(self, "probs", probs)

    def harden(self) -> Partition:
        """Collapse each row to its most probable slot."""
        return Partition(tuple(int(g) for g in self.probs.argmax(axis=1)))


@dataclass(frozen=True)
class GradConfig:
    learning_rate: float = 1.0
    momentum: float = 0.9
    max_iter: int = 2000
    restarts: int = 5
    converge_tol: float = 1e-8
    seed: int = 0
    mass_tol: float = DEFAULT_MASS_TOL

    def __post_init__(self) -> None:
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be positive")
        if not 0.0 <= self.momentum < 1.0:
            raise ValueError("momentum must be in [0, 1)")
        if self.restarts < 1 or self.max_iter < 1:
            raise ValueError("restarts and max_iter must be at least 1")


def _soft_macro_value_grad(
    w: np.ndarray,
    pi: np.ndarray,
    probs: np.ndarray,
    mass_tol: float,
    need_grad: bool,
) -> tuple[float, np.ndarray | None]:
    """Soft-macro EI and (optionally) its gradient with respect to probs.

    With Q = diag(pi) @ w, slot masses s = M.T @ pi, and macro transition
    T = diag(1/s) M.T Q M restricted to slots with s > mass_tol, EI is the
    entropy of the mean row of T minus the mean row entropy. The returned
    gradient treats pi as constant.
    """
    m = probs
    s = m.T @ pi
    q = pi[:, None] * w
    u = m.T @ q @ m
    active = s > mass_tol
    if not active.any():
        return 0.0, np.zeros_like(m) if need_grad else None
    ai = np.flatnonzero(active)
    t = u[np.ix_(ai, ai)] / s[ai, None]
    live = t.sum(axis=1) > 0.0
    k = int(live.sum())
    if k == 0:
        return 0.0, np.zeros_like(m) if need_grad else None
    rows = t[live]
    mean_row = rows.mean(axis=0)
    log_rows = np.zeros_like(rows)
    np.log2(rows, out=log_rows, where=rows > 0.0)
    value = shannon_entropy(mean_row) + float((rows * log_rows).sum() / k)
    if not need_grad:
        return value, None
    log_mean = np.zeros_like(mean_row)
    np.log2(mean_row, out=log_mean, where=mean_row > 0.0)
    g_t = np.zeros_like(t)
    g_t[live] = (log_rows - log_mean[None, :]) / k
    g_u = np.zeros_like(u)
    g_u[np.ix_(ai, ai)] = g_t / s[ai, None]
    g_s = np.zeros_like(s)
    g_s[ai] = -(g_t * t).sum(axis=1) / s[ai]
    g_m = q @ m @ g_u.T + q.T @ m @ g_u + pi[:, None] * g_s[None, :]
    return value, g_m


def soft_ei(
    net: Network,
    pi: StationaryDistribution | np.ndarray,
    assign: SoftAssignment,
    mass_tol: float = DEFAULT_MASS_TOL,
) -> float:
    """EI of the soft coarse-graining induced by ``assign``, in bits."""
    net = normalize(net)
    p = pi.pi if isinstance(pi, StationaryDistribution) else np.asarray(pi, float)
    if assign.probs.shape != (net.n, net.n):
        raise ValueError("assignment shape does not match network size")
    value, _ = _soft_macro_value_grad(
        net.weights, p, assign.probs, mass_tol, need_grad=False
    )
    return value


def soft_ei_gradient(
    net: Network,
    pi: StationaryDistribution | np.ndarray,
    assign: SoftAssignment,
    mass_tol: float = DEFAULT_MASS_TOL,
) -> tuple[float, np.ndarray]:
    """Soft EI and its gradient with respect to the logits."""
    net = normalize(net)
    p = pi.pi if isinstance(pi, StationaryDistribution) else np.asarray(pi, float)
    value, g_m = _soft_macro_value_grad(
        net.weights, p, assign.probs, mass_tol, need_grad=True
    )
    m = assign.probs
    grad = m * (g_m - (m * g_m).sum(axis=1, keepdims=True))
    return value, grad


def gradient_search(
    net: Network,
    cfg: GradConfig = GradConfig(),
    trace: list[dict] | None = None,
) -> MacroResult:
    """Momentum ascent on soft EI, hardened by per-row argmax.

    Each restart initializes logits from a 0.1-scaled standard normal,
    ascends until the EI change over the convergence window drops below
    converge_tol or max_iter is reached, hardens, and scores the hard
    partition exactly. A restart hitting a non-finite gradient is abandoned;
    the best hard result across restarts is returned, falling back to the
    identity partition when nothing beats zero gain.
    """
    net = normalize(net)
    n = net.n
    if n < 2:
        raise ValueError("gradient search needs at least 2 nodes")
    pi = stationary(net)
    ei_micro = effective_information(net).ei

    best_part = Partition.identity(n)
    best_gain = 0.0
    for seq in np.random.SeedSequence(cfg.seed).spawn(cfg.restarts):
        rng = np.random.default_rng(seq)
        logits = 0.1 * rng.standard_normal((n, n))
        velocity = np.zeros_like(logits)
        history: list[float] = []
        aborted = False
        iterations = 0
        for iterations in range(1, cfg.max_iter + 1):
            value, grad = soft_ei_gradient(
                net, pi, SoftAssignment(logits), cfg.mass_tol
            )
            if not np.all(np.isfinite(grad)):
                aborted = True
                break
            velocity = cfg.momentum * velocity + cfg.learning_rate * grad
            logits = logits + velocity
            history.append(value)
            if (
                len(history) > max(CONVERGENCE_WARMUP, CONVERGENCE_WINDOW)
                and abs(history[-1] - history[-1 - CONVERGENCE_WINDOW])
                < cfg.converge_tol
            ):
                break
        entry = {"iterations": iterations, "aborted": aborted}
        if not aborted:
            part = SoftAssignment(logits).harden()
            gain = (
                effective_information(coarse_grain(net, pi, part)).ei - ei_micro
            )
            entry["gain"] = gain
            if gain > best_gain + 1e-12:
                best_gain = gain
                best_part = part
        if trace is not None:
            trace.append(entry)
    return causal_emergence(net, best_part)
