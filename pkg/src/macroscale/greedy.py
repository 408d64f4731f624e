"""Greedy pairwise-merge search for causal emergence.

Seeds a candidate queue from each node's Markov blanket, keeps any merge
that raises effective information, and extends the queue with the merged
node's blanket. Nodes already absorbed into a multi-node group are neither
re-seeded nor offered as merge targets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .coarse import MacroResult, Partition, causal_emergence, coarse_grain
from .ei import effective_information
from .network import Network, blanket_matrix, normalize, stationary


@dataclass(frozen=True)
class GreedyConfig:
    min_gain: float = 1e-10
    node_order: str = "ascending"  # or "random"
    seed: int = 0

    def __post_init__(self) -> None:
        if self.min_gain < 0:
            raise ValueError("min_gain must be nonnegative")
        if self.node_order not in ("ascending", "random"):
            raise ValueError(f"unknown node_order {self.node_order!r}")


def greedy_search(
    net: Network,
    cfg: GreedyConfig = GreedyConfig(),
    trace: list[tuple[int, int, float, float]] | None = None,
) -> MacroResult:
    """Accept-first greedy merging over Markov-blanket pairs.

    Args:
        net: normalized network with at least 2 nodes.
        cfg: gain threshold and seed-node ordering.
        trace: optional list collecting (seed_node, merged_node, ei_before,
            ei_after) for every accepted merge.

    Returns:
        MacroResult for the final partition; the identity partition with
        zero causal emergence when no merge helps.
    """
    net = normalize(net)
    n = net.n
    if n < 2:
        raise ValueError("greedy search needs at least 2 nodes")
    pi = stationary(net)
    blankets = blanket_matrix(net)

    partition = Partition.identity(n)
    current_ei = effective_information(net).ei

    order = list(range(n))
    if cfg.node_order == "random":
        np.random.default_rng(cfg.seed).shuffle(order)

    group_size = [1] * n
    for i in order:
        if group_size[partition.assignment[i]] > 1:
            continue  # absorbed earlier; not re-seeded
        queue = deque(np.flatnonzero(blankets[i]).tolist())
        queued = set(queue)
        while queue:
            j = queue.popleft()
            if partition.assignment[j] == partition.assignment[i]:
                continue
            if group_size[partition.assignment[j]] > 1:
                continue  # absorbed nodes are not merge targets
            candidate = partition.merged(i, j)
            cand_ei = effective_information(coarse_grain(net, pi, candidate)).ei
            if cand_ei - current_ei > cfg.min_gain:
                if trace is not None:
                    trace.append((i, j, current_ei, cand_ei))
                partition = candidate
                group_size = list(partition.group_sizes)
                current_ei = cand_ei
                for k in np.flatnonzero(blankets[j]).tolist():
                    if k != i and k not in queued:
                        queued.add(k)
                        queue.append(k)
    return causal_emergence(net, partition)
