"""Spectral macroscale search: eigenvalue-weighted embedding plus OPTICS.

Nodes are embedded using the non-kernel eigenpairs of the transition matrix
(each eigenvector scaled by its eigenvalue), compared by cosine distance
within Markov blankets (infinite distance outside, where grouping cannot
raise effective information), ordered by OPTICS, and cut at a sweep of
epsilon thresholds; the cut with the largest EI gain wins.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

import numpy as np

from .coarse import MacroResult, Partition, causal_emergence, coarse_grain
from .ei import effective_information
from .network import Network, blanket_matrix, normalize, stationary

# Magnitudes below this (relative to the largest) count as zero eigenvalues.
DEFAULT_ZERO_TOL = 1e-10
# Below this, an embedding row is treated as the zero vector.
_NORM_TINY = 1e-12


@dataclass(frozen=True, eq=False)
class SpectralEmbedding:
    """Per-node coordinates from the nonzero-eigenvalue eigenbasis.

    ``eigenvalues`` holds the retained (possibly complex) eigenvalues; their
    count is the numerical rank of the transition matrix. ``vectors`` has one
    row per node; a complex eigenpair contributes two real columns (real and
    imaginary parts scaled by the eigenvalue magnitude), so the width can
    exceed the rank.
    """

    vectors: np.ndarray
    eigenvalues: np.ndarray
    zero_tol: float

    @property
    def rank(self) -> int:
        return len(self.eigenvalues)


@dataclass(frozen=True)
class OpticsConfig:
    min_samples: int = 2
    epsilon_grid: int = 40
    max_eps: float = float("inf")

    def __post_init__(self) -> None:
        if self.min_samples < 2:
            raise ValueError("min_samples must be at least 2")
        if self.epsilon_grid < 1:
            raise ValueError("epsilon_grid must be at least 1")


@dataclass(frozen=True, eq=False)
class OpticsResult:
    """Reachability ordering; infinite reachability marks cluster starts."""

    ordering: np.ndarray
    reachability: np.ndarray
    core_distance: np.ndarray


def embed(net: Network, zero_tol: float = DEFAULT_ZERO_TOL) -> SpectralEmbedding:
    """Eigendecompose the transition matrix and drop the kernel.

    Eigenpairs with |eigenvalue| <= zero_tol * max(|eigenvalue|) are
    discarded; the rest are scaled by their eigenvalues to weight each
    node's coordinates. Raises numpy.linalg.LinAlgError if the eigensolver
    fails to converge.
    """
    net = normalize(net)
    values, vectors = np.linalg.eig(net.weights)
    mags = np.abs(values)
    largest = mags.max() if len(mags) else 0.0
    keep = mags > zero_tol * largest if largest > 0.0 else np.zeros(net.n, bool)
    columns: list[np.ndarray] = []
    for k in np.flatnonzero(keep):
        lam, vec = values[k], vectors[:, k]
        if abs(lam.imag) == 0.0 and np.abs(vec.imag).max(initial=0.0) == 0.0:
            columns.append(lam.real * vec.real)
        else:
            columns.append(abs(lam) * vec.real)
            columns.append(abs(lam) * vec.imag)
    coords = np.column_stack(columns) if columns else np.zeros((net.n, 0))
    return SpectralEmbedding(
        vectors=coords, eigenvalues=values[keep], zero_tol=zero_tol
    )


def distances(emb: SpectralEmbedding, net: Network) -> np.ndarray:
    """Cosine distance between embedding rows, infinite outside blankets.

    Pairs that are not in each other's Markov blanket get infinity. Rows of
    (numerically) zero norm are at distance 0 from each other and 2 from
    everything else. Finite entries are clamped to [0, 2]; the matrix is
    exactly symmetric with a zero diagonal.
    """
    x = emb.vectors
    norms = np.linalg.norm(x, axis=1)
    zero = norms <= _NORM_TINY
    safe = np.where(zero, 1.0, norms)
    unit = x / safe[:, None]
    d = 1.0 - unit @ unit.T
    np.clip(d, 0.0, 2.0, out=d)
    d[zero[:, None] | zero[None, :]] = 2.0
    d[np.ix_(zero, zero)] = 0.0
    pair_ok = blanket_matrix(net)
    d[~(pair_ok | pair_ok.T)] = np.inf
    d = np.triu(d, 1)
    d = d + d.T
    np.fill_diagonal(d, 0.0)
    return d


def optics_order(d: np.ndarray, cfg: OpticsConfig = OpticsConfig()) -> OpticsResult:
    """Standard OPTICS ordering over a precomputed distance matrix.

    Core distance of a point is its min_samples-th smallest row entry (the
    point itself included at distance 0); points whose core distance exceeds
    max_eps never expand. Implemented with a lazy-deletion heap; ties pop in
    ascending node order for determinism.
    """
    n = d.shape[0]
    if d.shape != (n, n):
        raise ValueError("distance matrix must be square")
    if cfg.min_samples <= n:
        core = np.sort(d, axis=1)[:, cfg.min_samples - 1]
    else:
        core = np.full(n, np.inf)
    core = np.where(core <= cfg.max_eps, core, np.inf)

    reach = np.full(n, np.inf)
    processed = np.zeros(n, bool)
    ordering: list[int] = []
    heap: list[tuple[float, int]] = []

    def expand(p: int) -> None:
        if not np.isfinite(core[p]):
            return
        row = d[p]
        candidates = ~processed & (row <= cfg.max_eps) & np.isfinite(row)
        idx = np.flatnonzero(candidates)
        new_reach = np.maximum(core[p], row[idx])
        for o, r in zip(idx, new_reach):
            if r < reach[o]:
                reach[o] = r
                heapq.heappush(heap, (r, int(o)))

    for start in range(n):
        if processed[start]:
            continue
        processed[start] = True
        ordering.append(start)
        expand(start)
        while heap:
            r, o = heapq.heappop(heap)
            if processed[o] or r > reach[o]:
                continue
            processed[o] = True
            ordering.append(o)
            expand(o)
    return OpticsResult(
        ordering=np.array(ordering),
        reachability=reach,
        core_distance=core,
    )


def dbscan_cut(res: OpticsResult, eps: float) -> np.ndarray:
    """Extract a flat clustering from the ordering at threshold eps.

    Walking the ordering, a point with reachability above eps either opens
    a new cluster (if it is a core point at eps) or is noise (label -1);
    other points join the currently open cluster.
    """
    labels = np.full(len(res.ordering), -1)
    current = -1
    for idx in res.ordering:
        if res.reachability[idx] > eps:
            if res.core_distance[idx] <= eps:
                current += 1
                labels[idx] = current
            else:
                labels[idx] = -1
        elif current >= 0:
            labels[idx] = current
    return labels


def partition_from_labels(labels: np.ndarray) -> Partition:
    """Clusters become groups; noise points stay singletons."""
    assignment = []
    next_id = labels.max(initial=-1) + 1
    for lab in labels:
        if lab >= 0:
            assignment.append(int(lab))
        else:
            assignment.append(next_id)
            next_id += 1
    return Partition(tuple(assignment))


def spectral_search(
    net: Network,
    cfg: OpticsConfig = OpticsConfig(),
    zero_tol: float = DEFAULT_ZERO_TOL,
) -> MacroResult:
    """Best EI gain over an epsilon sweep of OPTICS cuts.

    Thresholds are quantiles of the finite reachability values, adapting
    the sweep to the network's own distance scales. Returns the identity
    partition when no cut beats zero gain.
    """
    net = normalize(net)
    identity = Partition.identity(net.n)
    if net.n < 2:
        return causal_emergence(net, identity)
    emb = embed(net, zero_tol)
    d = distances(emb, net)
    res = optics_order(d, cfg)

    finite = np.sort(res.reachability[np.isfinite(res.reachability)])
    best_part = identity
    best_gain = 0.0
    if len(finite):
        pi = stationary(net)
        ei_micro = effective_information(net).ei
        thresholds = np.unique(
            np.quantile(finite, np.linspace(0.0, 1.0, cfg.epsilon_grid))
        )
        seen: set[tuple[int, ...]] = {identity.assignment}
        for eps in thresholds:
            part = partition_from_labels(dbscan_cut(res, eps))
            if part.assignment in seen:
                continue
            seen.add(part.assignment)
            gain = effective_information(coarse_grain(net, pi, part)).ei - ei_micro
            if gain > best_gain + 1e-12:
                best_gain = gain
                best_part = part
    return causal_emergence(net, best_part)
