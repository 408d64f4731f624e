"""Coarse-graining networks: partitions, macro-nodes, and causal emergence.

A partition groups micro-nodes into macro-nodes. Each macro-node's
out-weight vector is the stationary-distribution-weighted average of its
members' rows, with destination mass aggregated by group (mass staying
inside the group becomes self-loop mass). Causal emergence is the gain in
effective information of the recast network over the original.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .ei import effective_information
from .network import Network, StationaryDistribution, normalize, stationary, walk_step

DEFAULT_HORIZON = 10


@dataclass(frozen=True)
class Partition:
    """Total assignment of micro-nodes to groups, in canonical form.

    Group identifiers are relabeled to 0..k-1 in order of first occurrence,
    so two partitions with the same grouping compare equal.
    """

    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        relabel: dict[int, int] = {}
        canon = []
        for g in self.assignment:
            if g not in relabel:
                relabel[g] = len(relabel)
            canon.append(relabel[g])
        object.__setattr__(self, "assignment", tuple(canon))

    @classmethod
    def identity(cls, n: int) -> Partition:
        return cls(tuple(range(n)))

    @classmethod
    def from_groups(cls, groups: list[list[int]], n: int) -> Partition:
        assignment = [-1] * n
        for gid, members in enumerate(groups):
            for i in members:
                if not 0 <= i < n:
                    raise ValueError(f"node {i} out of range for {n} nodes")
                if assignment[i] != -1:
                    raise ValueError(f"node {i} appears in more than one group")
                assignment[i] = gid
        if -1 in assignment:
            raise ValueError(f"node {assignment.index(-1)} missing from partition")
        return cls(tuple(assignment))

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def group_count(self) -> int:
        return max(self.assignment) + 1 if self.assignment else 0

    @property
    def groups(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.group_count)]
        for i, g in enumerate(self.assignment):
            out[g].append(i)
        return tuple(tuple(g) for g in out)

    @property
    def group_sizes(self) -> tuple[int, ...]:
        sizes = [0] * self.group_count
        for g in self.assignment:
            sizes[g] += 1
        return tuple(sizes)

    @property
    def largest_group_size(self) -> int:
        return max(self.group_sizes) if self.assignment else 0

    @property
    def is_identity(self) -> bool:
        return self.group_count == self.n

    def merged(self, i: int, j: int) -> Partition:
        """New partition with the groups containing i and j unioned."""
        gi, gj = self.assignment[i], self.assignment[j]
        if gi == gj:
            return self
        return Partition(tuple(gi if g == gj else g for g in self.assignment))

    def member_matrix(self) -> np.ndarray:
        """(n, k) one-hot indicator of group membership."""
        s = np.zeros((self.n, self.group_count))
        s[np.arange(self.n), self.assignment] = 1.0
        return s


@dataclass(frozen=True, eq=False)
class MacroResult:
    """A coarse-graining together with its effective-information payoff."""

    macro_net: Network
    partition: Partition
    ei_micro: float
    ei_macro: float
    causal_emergence: float
    accuracy: float


def _pi_vector(pi: StationaryDistribution | np.ndarray) -> np.ndarray:
    return pi.pi if isinstance(pi, StationaryDistribution) else np.asarray(pi, float)


def coarse_grain(
    net: Network,
    pi: StationaryDistribution | np.ndarray,
    part: Partition,
) -> Network:
    """Recast ``net`` with one node per group of ``part``.

    Each group's out-weight vector is the average of its members' rows
    weighted by their stationary probabilities (plain average if the group
    carries no stationary mass), then destination mass is summed by group.
    Rows are renormalized to absorb rounding drift.
    """
    net = normalize(net)
    if part.n != net.n:
        raise ValueError(f"partition covers {part.n} nodes, network has {net.n}")
    p = _pi_vector(pi)
    if p.shape != (net.n,):
        raise ValueError(f"stationary vector has wrong length {p.shape}")
    s = part.member_matrix()
    group_mass = s.T @ p
    gid = np.asarray(part.assignment)
    member_weight = np.where(
        group_mass[gid] > 0.0,
        p / np.where(group_mass[gid] > 0.0, group_mass[gid], 1.0),
        1.0 / np.asarray(part.group_sizes, dtype=float)[gid],
    )
    macro = (s * member_weight[:, None]).T @ (net.weights @ s)
    return normalize(Network(macro))


def accuracy(
    net: Network, part: Partition, horizon: int = DEFAULT_HORIZON
) -> float:
    """How well the macroscale walk reproduces the projected micro walk.

    Both scales start from the uniform distribution (the macro scale from
    its projection). Over ``horizon`` steps, the micro distribution is
    projected onto groups and compared with the macro distribution by total
    variation; the result is 1 minus the mean distance, so 1.0 is exact.
    """
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    net = normalize(net)
    macro = coarse_grain(net, stationary(net), part)
    s = part.member_matrix()
    micro_dist = np.full(net.n, 1.0 / net.n)
    macro_dist = micro_dist @ s
    tv_total = 0.0
    for _ in range(horizon):
        micro_dist = walk_step(net, micro_dist)
        macro_dist = walk_step(macro, macro_dist)
        tv_total += 0.5 * np.abs(micro_dist @ s - macro_dist).sum()
    return 1.0 - tv_total / horizon


def causal_emergence(
    net: Network, part: Partition, horizon: int = DEFAULT_HORIZON
) -> MacroResult:
    """Build the macro network for ``part`` and measure the EI gain."""
    net = normalize(net)
    pi = stationary(net)
    macro = coarse_grain(net, pi, part)
    ei_micro = effective_information(net).ei
    ei_macro = effective_information(macro).ei
    return MacroResult(
        macro_net=macro,
        partition=part,
        ei_micro=ei_micro,
        ei_macro=ei_macro,
        causal_emergence=ei_macro - ei_micro,
        accuracy=accuracy(net, part, horizon),
    )


def write_partition(part: Partition, path: str | Path) -> None:
    """Write one line per group: whitespace-separated node IDs."""
    lines = [" ".join(str(i) for i in group) for group in part.groups]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_partition(path: str | Path, n: int) -> Partition:
    groups = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            groups.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise ValueError(f"{path}: bad node ID in line {line!r}") from exc
    return Partition.from_groups(groups, n)
