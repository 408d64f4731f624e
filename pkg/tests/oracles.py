"""Independent reference implementations used as test oracles.

Everything here is deliberately written the slow, literal way (explicit
loops, library entropy, brute-force enumeration) so that it cannot share a
bug with the production code paths it checks.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np
from scipy import stats

import macroscale as ms


def iter_partitions(n: int) -> Iterator[list[list[int]]]:
    """Every set partition of {0..n-1}, by restricted growth."""

    def rec(i: int, groups: list[list[int]]) -> Iterator[list[list[int]]]:
        if i == n:
            yield [list(g) for g in groups]
            return
        for g in groups:
            g.append(i)
            yield from rec(i + 1, groups)
            g.pop()
        groups.append([i])
        yield from rec(i + 1, groups)
        groups.pop()

    yield from rec(0, [])


def textbook_ei(weights: np.ndarray) -> float:
    """Literal evaluation of the EI formula with library entropy calls."""
    rows = [row / row.sum() for row in np.asarray(weights, float) if row.sum() > 0]
    if not rows:
        return 0.0
    mean_row = np.mean(rows, axis=0)
    h_mean = float(stats.entropy(mean_row, base=2))
    h_rows = float(np.mean([stats.entropy(row, base=2) for row in rows]))
    return h_mean - h_rows


def best_partition_exhaustive(net: ms.Network) -> tuple[float, ms.Partition]:
    """Brute-force optimum of causal emergence over all set partitions."""
    best_ce = 0.0
    best_part = ms.Partition.identity(net.n)
    for groups in iter_partitions(net.n):
        part = ms.Partition.from_groups(groups, net.n)
        ce = ms.causal_emergence(net, part).causal_emergence
        if ce > best_ce + 1e-12:
            best_ce = ce
            best_part = part
    return best_ce, best_part


def dbscan_brute(dist: np.ndarray, eps: float, min_samples: int) -> list[set[int]]:
    """Classic region-query DBSCAN on a precomputed distance matrix.

    Returns the list of clusters (noise points are omitted). A point's
    neighborhood includes itself.
    """
    n = dist.shape[0]
    neighbors = [set(np.flatnonzero(dist[i] <= eps)) for i in range(n)]
    core = [i for i in range(n) if len(neighbors[i]) >= min_samples]
    labels = {}
    clusters: list[set[int]] = []
    for seed in core:
        if seed in labels:
            continue
        cluster = {seed}
        labels[seed] = len(clusters)
        frontier = [seed]
        while frontier:
            p = frontier.pop()
            if len(neighbors[p]) < min_samples:
                continue
            for q in neighbors[p]:
                if q not in cluster:
                    cluster.add(q)
                    labels[q] = len(clusters)
                    frontier.append(q)
        clusters.append(cluster)
    return clusters


def series_expm(a: np.ndarray, terms: int = 40) -> np.ndarray:
    """Matrix exponential by truncated power series."""
    acc = np.eye(a.shape[0])
    term = np.eye(a.shape[0])
    for k in range(1, terms + 1):
        term = term @ a / k
        acc = acc + term
    return acc


def central_difference_grad(f, x: np.ndarray, step: float = 1e-5) -> np.ndarray:
    grad = np.zeros_like(x)
    for idx in np.ndindex(*x.shape):
        plus = x.copy()
        minus = x.copy()
        plus[idx] += step
        minus[idx] -= step
        grad[idx] = (f(plus) - f(minus)) / (2 * step)
    return grad
