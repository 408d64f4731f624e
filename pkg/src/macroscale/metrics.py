"""Structural and information-theoretic network properties.

Everything needed to compare a network with its macroscale recasting:
walker entropy rate, global efficiency, betweenness and eigenvector
centrality, communicability entropy, degree statistics, assortativity,
kernel dimension, and an explicit degenerate-distribution witness built
from the kernel of the transition matrix.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .ei import effective_information, row_entropies, shannon_entropy
from .network import Network, StationaryDistribution, normalize, stationary

DEFAULT_RANK_TOL = 1e-10


class WitnessSearchError(RuntimeError):
    """Kernel is nontrivial but no sign-feasible kernel vector was found."""


@dataclass(frozen=True)
class MetricsReport:
    """One flat record of network properties at a single scale.

    ``assortativity`` is None when every edge endpoint has the same degree,
    where the correlation is undefined.
    """

    entropy_rate: float
    global_efficiency: float
    mean_betweenness: float
    mean_eigenvector_centrality: float
    communicability_entropy: float
    mean_degree: float
    degree_variance: float
    assortativity: float | None
    kernel_dimension: int
    determinism: float
    degeneracy: float


def entropy_rate(
    net: Network, pi: StationaryDistribution | np.ndarray | None = None
) -> float:
    """Mean per-step walker uncertainty over the stationary distribution.

    Returns -sum_i pi(i) sum_j p(i->j) log2 p(i->j), which is nonnegative;
    dangling rows contribute nothing.
    """
    net = normalize(net)
    if pi is None:
        pi = stationary(net)
    p = pi.pi if isinstance(pi, StationaryDistribution) else np.asarray(pi, float)
    return float(p @ row_entropies(net.weights))


def _adjacency(net: Network) -> np.ndarray:
    return net.weights > 0.0


def _bfs_distances(adj_lists: list[np.ndarray], source: int, n: int) -> np.ndarray:
    dist = np.full(n, -1)
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj_lists[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def global_efficiency(net: Network) -> float:
    """Mean inverse shortest-path length over ordered pairs.

    Paths follow the unweighted directed edge structure; unreachable pairs
    contribute zero.
    """
    n = net.n
    if n < 2:
        raise ValueError("global efficiency needs at least 2 nodes")
    adj = _adjacency(net)
    adj_lists = [np.flatnonzero(adj[v]) for v in range(n)]
    total = 0.0
    for source in range(n):
        dist = _bfs_distances(adj_lists, source, n)
        reached = dist > 0
        total += (1.0 / dist[reached]).sum()
    return total / (n * (n - 1))


def betweenness(net: Network) -> np.ndarray:
    """Brandes betweenness on the unweighted directed structure.

    Normalized by (n - 1)(n - 2), the number of ordered pairs a node could
    mediate; zeros for n < 3.
    """
    n = net.n
    if n < 2:
        raise ValueError("betweenness needs at least 2 nodes")
    adj = _adjacency(net)
    np.fill_diagonal(adj, False)
    adj_lists = [np.flatnonzero(adj[v]) for v in range(n)]
    centrality = np.zeros(n)
    for source in range(n):
        stack: list[int] = []
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma = np.zeros(n)
        sigma[source] = 1.0
        dist = np.full(n, -1)
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            stack.append(v)
            for w in adj_lists[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = np.zeros(n)
        while stack:
            w = stack.pop()
            for v in preds[w]:
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w != source:
                centrality[w] += delta[w]
    if n > 2:
        centrality /= (n - 1) * (n - 2)
    return centrality


def _power_iterate(mat: np.ndarray, tol: float, max_iter: int) -> tuple[np.ndarray, bool]:
    n = mat.shape[0]
    x = np.full(n, 1.0 / np.sqrt(n))
    for _ in range(max_iter):
        y = mat @ x
        norm = np.linalg.norm(y)
        if norm == 0.0:
            return x, False
        y /= norm
        if np.abs(y - x).max() <= tol:
            return y, True
        x = y
    return x, False


def eigenvector_centrality(
    net: Network, tol: float = 1e-10, max_iter: int = 1000
) -> np.ndarray:
    """Dominant eigenvector of the binary adjacency structure (in-edges).

    Power iteration can oscillate on periodic (e.g. bipartite) structure;
    in that case the iteration falls back to A + I, which shares the same
    dominant eigenvector. L2-normalized and nonnegative.
    """
    if net.n < 2:
        raise ValueError("eigenvector centrality needs at least 2 nodes")
    a = _adjacency(net).astype(float).T
    x, converged = _power_iterate(a, tol, max_iter)
    if not converged:
        x, _ = _power_iterate(a + np.eye(net.n), tol, max_iter)
    return np.abs(x)


def communicability_entropy(net: Network) -> float:
    """Entropy (bits) of the normalized upper-triangular communicability.

    Communicability is the matrix exponential of the binary adjacency
    structure; the i < j entries, normalized to sum one, form the sequence
    whose Shannon entropy is returned.
    """
    if net.n < 2:
        raise ValueError("communicability entropy needs at least 2 nodes")
    comm = expm(_adjacency(net).astype(float))
    seq = comm[np.triu_indices(net.n, k=1)]
    total = seq.sum()
    if total <= 0.0:
        return 0.0
    return shannon_entropy(seq / total)


def _undirected_degree(net: Network) -> tuple[np.ndarray, np.ndarray]:
    """Symmetrized binary neighbor structure (self-loops ignored) and degrees."""
    adj = _adjacency(net)
    sym = adj | adj.T
    np.fill_diagonal(sym, False)
    return sym, sym.sum(axis=1).astype(float)


def degree_stats(net: Network) -> tuple[float, float]:
    """Mean and (population) variance of the undirected degree."""
    if net.n < 2:
        raise ValueError("degree stats need at least 2 nodes")
    _, deg = _undirected_degree(net)
    return float(deg.mean()), float(deg.var())


def assortativity(net: Network) -> float | None:
    """Pearson correlation of degrees across edge endpoints.

    Each undirected edge contributes both orientations. None when there are
    no edges or all endpoint degrees coincide (zero variance).
    """
    if net.n < 2:
        raise ValueError("assortativity needs at least 2 nodes")
    sym, deg = _undirected_degree(net)
    src, dst = np.nonzero(sym)
    if len(src) == 0:
        return None
    x, y = deg[src], deg[dst]
    if x.var() == 0.0 or y.var() == 0.0:
        return None
    return float(np.corrcoef(x, y)[0, 1])


def kernel_dimension(net: Network, tol: float = DEFAULT_RANK_TOL) -> int:
    """Nullity of the normalized transition matrix via singular values."""
    net = normalize(net)
    sv = np.linalg.svd(net.weights, compute_uv=False)
    if len(sv) == 0 or sv[0] == 0.0:
        return net.n
    return int(net.n - (sv > tol * sv[0]).sum())


def _kernel_basis(w: np.ndarray, tol: float) -> np.ndarray:
    """Orthonormal basis (columns) of the left kernel: vectors v with vW = 0."""
    _, sv, vt = np.linalg.svd(w.T)
    if len(sv) == 0 or sv[0] == 0.0:
        return np.eye(w.shape[0])
    rank = int((sv > tol * sv[0]).sum())
    return vt[rank:].T


def degenerate_witness(
    net: Network,
    x: np.ndarray,
    seed: int = 0,
    tol: float = DEFAULT_RANK_TOL,
) -> np.ndarray | None:
    """A distribution w != x with the same successor distribution as x.

    Searches the kernel of the transition for a real vector v that is
    nonnegative wherever x is zero (so that a positive step stays feasible),
    takes the largest step b keeping x + b*v a distribution, and returns the
    midpoint w = x + (b/2)*v. Returns None when the kernel is trivial;
    raises WitnessSearchError when the kernel is nontrivial but the seeded
    search finds no sign-feasible vector.
    """
    net = normalize(net)
    x = np.asarray(x, dtype=float)
    if x.shape != (net.n,):
        raise ValueError(f"x must have length {net.n}")
    if np.any(x < -1e-12) or abs(x.sum() - 1.0) > 1e-9:
        raise ValueError("x must be a probability distribution")
    basis = _kernel_basis(net.weights, tol)
    if basis.shape[1] == 0:
        return None

    zero_at = x <= 1e-15
    rng = np.random.default_rng(seed)

    def feasible(v: np.ndarray) -> bool:
        if np.abs(v).max() <= 1e-12 or abs(v.sum()) > 1e-9:
            return False
        return bool(np.all(v[zero_at] >= -1e-12))

    candidates = [basis[:, k] for k in range(basis.shape[1])]
    candidates += [-basis[:, k] for k in range(basis.shape[1])]
    for _ in range(200):
        coeffs = rng.standard_normal(basis.shape[1])
        candidates.append(basis @ coeffs)
    chosen = next((v for v in candidates if feasible(v)), None)
    if chosen is None:
        raise WitnessSearchError(
            "no kernel vector is nonnegative on the zeros of x"
        )
    v = chosen / np.abs(chosen).max()
    negative = v < -1e-15
    if negative.any():
        bound = float((x[negative] / -v[negative]).min())
    else:
        bound = 1.0
    w = x + 0.5 * bound * v
    w = np.clip(w, 0.0, None)
    return w / w.sum()


def metrics_report(
    net: Network, pi: StationaryDistribution | np.ndarray | None = None
) -> MetricsReport:
    """All scalar properties of one network, for one scale."""
    net = normalize(net)
    breakdown = effective_information(net)
    mean_deg, var_deg = degree_stats(net)
    return MetricsReport(
        entropy_rate=entropy_rate(net, pi),
        global_efficiency=global_efficiency(net),
        mean_betweenness=float(betweenness(net).mean()),
        mean_eigenvector_centrality=float(eigenvector_centrality(net).mean()),
        communicability_entropy=communicability_entropy(net),
        mean_degree=mean_deg,
        degree_variance=var_deg,
        assortativity=assortativity(net),
        kernel_dimension=kernel_dimension(net),
        determinism=breakdown.determinism,
        degeneracy=breakdown.degeneracy,
    )
