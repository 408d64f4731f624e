"""Seeded network generators for experiments and tests.

All generators build an undirected edge set, symmetrize it into a directed
network (w[i, j] = w[j, i] = 1), and normalize rows, matching how
random-walk effective information is computed on these families.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .network import Network, normalize


@dataclass(frozen=True)
class PAConfig:
    """Preferential-attachment growth parameters.

    Each new node attaches ``m`` distinct edges to existing nodes chosen
    with probability proportional to degree**alpha. alpha = 1 is the
    scale-free regime; alpha > 1 condenses onto hubs.
    """

    n: int
    m: int = 1
    alpha: float = 1.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("m must be at least 1")
        if self.n < self.m + 1:
            raise ValueError("n must be at least m + 1")
        if not np.isfinite(self.alpha):
            raise ValueError("alpha must be finite")


def _from_undirected_edges(n: int, edges: list[tuple[int, int]]) -> Network:
    w = np.zeros((n, n))
    for i, j in edges:
        w[i, j] = 1.0
        w[j, i] = 1.0
    return normalize(Network(w))


def preferential_attachment(cfg: PAConfig) -> Network:
    """Grow a network by degree-biased attachment; deterministic under seed.

    Starts from a clique on m + 1 nodes. Targets for each arriving node are
    drawn without replacement with probability proportional to (undirected)
    degree**alpha, with 0**0 taken as 1 so alpha = 0 is uniform attachment.
    """
    rng = np.random.default_rng(cfg.seed)
    degree = np.zeros(cfg.n)
    edges: list[tuple[int, int]] = []
    for i in range(cfg.m + 1):
        for j in range(i):
            edges.append((i, j))
            degree[i] += 1
            degree[j] += 1
    for t in range(cfg.m + 1, cfg.n):
        bias = np.power(degree[:t], cfg.alpha)
        for _ in range(cfg.m):
            total = bias.sum()
            if total <= 0.0:
                bias = np.ones(t)
                total = float(t)
            target = int(rng.choice(t, p=bias / total))
            bias[target] = 0.0
            edges.append((t, target))
            degree[t] += 1
            degree[target] += 1
    return _from_undirected_edges(cfg.n, edges)


def star(n: int) -> Network:
    """Hub node 0 joined to n - 1 leaves."""
    if n < 1:
        raise ValueError("star needs at least 1 node")
    return _from_undirected_edges(n, [(0, i) for i in range(1, n)])


def cycle(n: int) -> Network:
    """Undirected ring; normalized rows have two 0.5 entries."""
    if n < 3:
        raise ValueError("cycle needs at least 3 nodes")
    return _from_undirected_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Network:
    """All pairs joined, no self-loops."""
    if n < 1:
        raise ValueError("complete needs at least 1 node")
    return _from_undirected_edges(
        n, [(i, j) for i in range(n) for j in range(i)]
    )


def erdos_renyi(n: int, p: float, seed: int = 0) -> Network:
    """Each unordered pair joined independently with probability p."""
    if n < 1:
        raise ValueError("erdos_renyi needs at least 1 node")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    rng = np.random.default_rng(seed)
    edges = [
        (i, j) for i in range(n) for j in range(i) if rng.random() < p
    ]
    return _from_undirected_edges(n, edges)
