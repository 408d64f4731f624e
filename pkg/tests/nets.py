"""Shared network builders for the test suite."""

from __future__ import annotations

import numpy as np

import macroscale as ms


def clique_selfloop_net() -> ms.Network:
    """4-clique with uniform rows over itself plus an isolated self-loop node."""
    w = np.zeros((5, 5))
    w[:4, :4] = 0.25
    w[4, 4] = 1.0
    return ms.Network(w)


def directed_ring(n: int) -> ms.Network:
    """Deterministic cycle: node i steps to i+1 with probability 1."""
    w = np.zeros((n, n))
    for i in range(n):
        w[i, (i + 1) % n] = 1.0
    return ms.Network(w)


def hub_spoke_net() -> ms.Network:
    """Four spokes feeding a hub that spreads back uniformly; pi = (1/2, 1/8 x4)."""
    w = np.zeros((5, 5))
    w[1:, 0] = 1.0
    w[0, 1:] = 0.25
    return ms.Network(w)


def funnel_abc_net() -> ms.Network:
    """Symmetrized a-c, b-c with a self-loop on c; rank 2, kernel dimension 1."""
    w = np.zeros((3, 3))
    w[0, 2] = w[2, 0] = 1.0
    w[1, 2] = w[2, 1] = 1.0
    w[2, 2] = 1.0
    return ms.normalize(ms.Network(w))


def random_symmetric_net(
    seed: int,
    n: int | None = None,
    weighted: bool = True,
    duplicate_pair: bool = False,
) -> ms.Network:
    """Seeded symmetrized random network, optionally with two identical rows."""
    rng = np.random.default_rng(seed)
    if n is None:
        n = int(rng.integers(4, 7))
    mask = rng.random((n, n)) < rng.uniform(0.35, 0.7)
    if weighted:
        w = np.where(mask, rng.choice([0.5, 1.0, 2.0], size=(n, n)), 0.0)
    else:
        w = mask.astype(float)
    w = np.maximum(w, w.T)
    np.fill_diagonal(w, 0.0)
    if w.sum() == 0:
        w[0, 1] = w[1, 0] = 1.0
    if duplicate_pair:
        i, j = rng.choice(n, size=2, replace=False)
        w[j] = w[i]
        w[:, j] = w[:, i]
    return ms.normalize(ms.Network(w))
