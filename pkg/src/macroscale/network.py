"""Weighted directed networks with row-stochastic random-walk structure.

A network is a dense nonnegative weight matrix; row i is the out-weight
vector of node i. Once normalized, entry (i, j) is the probability that a
random walker on i steps to j. All operations here are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

# A row counts as normalized when its sum is within this of 1.
ROW_SUM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Network:
    """Immutable weighted directed graph on nodes 0..n-1.

    Args:
        weights: (n, n) finite nonnegative matrix; ``weights[i, j]`` is the
            weight of edge i -> j, 0 meaning no edge.
        labels: optional string names, one per node.
    """

    weights: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        w = np.array(self.weights, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ValueError(f"weight matrix must be square, got shape {w.shape}")
        if not np.all(np.isfinite(w)):
            raise ValueError("edge weights must be finite")
        if np.any(w < 0):
            raise ValueError("edge weights must be nonnegative")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != w.shape[0]:
                raise ValueError(
                    f"expected {w.shape[0]} labels, got {len(labels)}"
                )
            object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    @property
    def out_strength(self) -> np.ndarray:
        return self.weights.sum(axis=1)

    @property
    def dangling(self) -> np.ndarray:
        """Boolean mask of nodes with no out-edges."""
        return self.out_strength == 0.0

    def is_normalized(self) -> bool:
        s = self.out_strength
        return bool(np.all((s == 0.0) | (np.abs(s - 1.0) <= ROW_SUM_TOL)))


@dataclass(frozen=True, eq=False)
class StationaryDistribution:
    """Fixed point of the random walk, found by damped power iteration."""

    pi: np.ndarray
    converged: bool
    iterations: int


def normalize(net: Network) -> Network:
    """Divide every nonzero row by its sum; zero (dangling) rows are kept.

    Idempotent: rows already summing to 1 within ``ROW_SUM_TOL`` are left
    bit-for-bit unchanged.
    """
    w = net.weights
    s = w.sum(axis=1)
    needs = (s > 0.0) & (np.abs(s - 1.0) > ROW_SUM_TOL)
    if not needs.any():
        return net
    out = np.array(w)
    out[needs] /= s[needs, None]
    return Network(out, labels=net.labels)


def walk_step(net: Network, dist: np.ndarray) -> np.ndarray:
    """One step of the walk; mass on dangling nodes spreads uniformly."""
    w = net.weights
    nxt = dist @ w
    lost = dist[net.dangling].sum()
    if lost > 0.0:
        nxt = nxt + lost / net.n
    return nxt


def stationary(
    net: Network, tol: float = 1e-12, max_iter: int | None = None
) -> StationaryDistribution:
    """Stationary distribution by power iteration from the uniform vector.

    Iterates the half-lazy chain (I + W)/2, which has the same fixed points
    as W but also converges on periodic structure such as symmetrized trees
    and stars, where plain left-multiplication oscillates forever. Mass on
    dangling rows is redistributed uniformly over all nodes each step.

    Args:
        net: normalized network.
        tol: L1 change threshold for convergence.
        max_iter: iteration cap; defaults to 10 * n + 1000.

    Returns:
        StationaryDistribution; ``converged`` is False when the cap was hit,
        in which case ``pi`` is the best iterate (not an error).
    """
    net = normalize(net)
    n = net.n
    if max_iter is None:
        max_iter = 10 * n + 1000
    x = np.full(n, 1.0 / n)
    for it in range(1, max_iter + 1):
        nxt = 0.5 * (x + walk_step(net, x))
        total = nxt.sum()
        if total > 0.0:
            nxt = nxt / total
        if np.abs(nxt - x).sum() <= tol:
            return StationaryDistribution(nxt, True, it)
        x = nxt
    return StationaryDistribution(x, False, max_iter)


def markov_blanket(net: Network, i: int) -> set[int]:
    """Parents, children, and parents-of-children of node i, excluding i."""
    n = net.n
    if not 0 <= i < n:
        raise ValueError(f"node index {i} out of range for {n} nodes")
    adj = net.weights > 0.0
    children = adj[i]
    parents = adj[:, i]
    co_parents = adj[:, children].any(axis=1) if children.any() else np.zeros(n, bool)
    blanket = children | parents | co_parents
    blanket[i] = False
    return set(np.flatnonzero(blanket))


def blanket_matrix(net: Network) -> np.ndarray:
    """Boolean matrix B with B[i, j] true iff j is in i's Markov blanket."""
    adj = net.weights > 0.0
    b = adj | adj.T | (adj.astype(np.uint8) @ adj.astype(np.uint8).T > 0)
    np.fill_diagonal(b, False)
    return b


def _format_node(i: int, labels: tuple[str, ...] | None) -> str:
    if labels is None:
        return str(i)
    return '"' + labels[i].replace('"', "'") + '"'


def write_edge_list(net: Network, path: str | Path) -> None:
    """Write one ``source<TAB>target<TAB>weight`` line per edge."""
    lines = []
    w = net.weights
    for i, j in zip(*np.nonzero(w)):
        lines.append(
            f"{_format_node(int(i), net.labels)}\t"
            f"{_format_node(int(j), net.labels)}\t{w[i, j]!r}"
        )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _parse_token(tok: str) -> tuple[str, bool]:
    """Return (name, is_label); quoted tokens are labels."""
    if len(tok) >= 2 and tok[0] == '"' and tok[-1] == '"':
        return tok[1:-1], True
    return tok, False


def read_edge_list(path: str | Path) -> Network:
    """Read the tab-separated edge-list format written by write_edge_list.

    Lines starting with ``#`` and blank lines are skipped. Plain nonnegative
    integer IDs are used as node indices directly (n = max ID + 1); if any
    quoted label appears, all IDs are mapped to dense indices in first-seen
    order instead. Weight defaults to 1.0 when omitted.
    """
    entries: list[tuple[str, str, float]] = []
    labeled = False
    for lineno, raw in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) not in (2, 3):
            raise ValueError(f"{path}:{lineno}: expected 2 or 3 tab-separated fields")
        src, src_lab = _parse_token(parts[0].strip())
        dst, dst_lab = _parse_token(parts[1].strip())
        labeled = labeled or src_lab or dst_lab
        try:
            weight = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: bad weight {parts[2]!r}") from exc
        if weight < 0 or not np.isfinite(weight):
            raise ValueError(f"{path}:{lineno}: weight must be finite and nonnegative")
        entries.append((src, dst, weight))
    if not entries:
        raise ValueError(f"{path}: no edges found")

    if not labeled and all(
        tok.isdigit() for src, dst, _ in entries for tok in (src, dst)
    ):
        n = max(max(int(s), int(d)) for s, d, _ in entries) + 1
        ids = {str(i): i for i in range(n)}
        labels = None
    else:
        ids = {}
        for src, dst, _ in entries:
            for tok in (src, dst):
                if tok not in ids:
                    ids[tok] = len(ids)
        n = len(ids)
        labels = tuple(ids)
    w = np.zeros((n, n))
    for src, dst, weight in entries:
        w[ids[src], ids[dst]] += weight
    return Network(w, labels=labels)
