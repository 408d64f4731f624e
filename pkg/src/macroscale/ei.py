"""Effective information of a network, in bits, with its decomposition."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .network import Network, normalize


@dataclass(frozen=True)
class EIBreakdown:
    """Effective information split into determinism and degeneracy.

    Identities (up to rounding): ``ei == determinism - degeneracy`` and
    ``determinism == log2(effective_nodes) - indeterminism``. Averages run
    over the ``effective_nodes`` nodes that have at least one out-edge.
    """

    ei: float
    determinism: float
    degeneracy: float
    indeterminism: float
    effective_nodes: int


def shannon_entropy(p: np.ndarray) -> float:
    """Entropy of a distribution in bits, with 0 * log(0) taken as 0."""
    p = np.asarray(p, dtype=float)
    nz = p > 0.0
    return float(-(p[nz] * np.log2(p[nz])).sum())


def row_entropies(rows: np.ndarray) -> np.ndarray:
    logs = np.zeros_like(rows)
    np.log2(rows, out=logs, where=rows > 0.0)
    return -(rows * logs).sum(axis=1)


def effective_information(net: Network) -> EIBreakdown:
    """Entropy of the mean out-weight vector minus the mean row entropy.

    Dangling nodes carry no distribution and are excluded from both the
    mean vector and the entropy average; a network with no edges at all
    yields the all-zero breakdown.
    """
    net = normalize(net)
    w = net.weights
    has_out = w.sum(axis=1) > 0.0
    n_eff = int(has_out.sum())
    if n_eff == 0:
        return EIBreakdown(0.0, 0.0, 0.0, 0.0, 0)
    rows = w[has_out]
    indeterminism = float(row_entropies(rows).mean())
    h_mean = shannon_entropy(rows.mean(axis=0))
    log_n = float(np.log2(n_eff))
    determinism = log_n - indeterminism
    degeneracy = log_n - h_mean
    return EIBreakdown(
        ei=h_mean - indeterminism,
        determinism=determinism,
        degeneracy=degeneracy,
        indeterminism=indeterminism,
        effective_nodes=n_eff,
    )
