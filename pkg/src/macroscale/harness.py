"""Experiment sweeps over preferential-attachment ensembles.

For each (alpha, sample, algorithm) cell the harness generates a seeded
network, runs the search, times it on the process CPU clock, measures the
full metric set at both scales, and appends one flat record. Records
serialize to CSV losslessly; re-running with the same master seed
reproduces every non-runtime column exactly.
"""

from __future__ import annotations

import csv
import dataclasses
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .coarse import MacroResult, Partition
from .generators import PAConfig, preferential_attachment
from .gradient import GradConfig, gradient_search
from .greedy import greedy_search
from .metrics import (
    MetricsReport,
    betweenness,
    eigenvector_centrality,
    metrics_report,
)
from .network import Network
from .spectral import spectral_search

ALGORITHMS = ("greedy", "spectral", "gradient")
# Fixed tags keep per-algorithm seeds independent of the configured order.
_ALGO_TAGS = {"greedy": 101, "spectral": 102, "gradient": 103}

_METRIC_FIELDS = tuple(f.name for f in dataclasses.fields(MetricsReport))


@dataclass(frozen=True)
class ExperimentConfig:
    alpha_values: tuple[float, ...]
    n: int = 150
    m: int = 1
    samples: int = 40
    algorithms: tuple[str, ...] = ALGORITHMS
    seed: int = 0
    output_dir: str = "results"
    workers: int = 1

    def __post_init__(self) -> None:
        if not self.alpha_values:
            raise ValueError("alpha_values must be nonempty")
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown:
            raise ValueError(f"unknown algorithms: {sorted(unknown)}")
        object.__setattr__(self, "alpha_values", tuple(float(a) for a in self.alpha_values))
        object.__setattr__(self, "algorithms", tuple(self.algorithms))


@dataclass(frozen=True)
class RunRecord:
    """One sweep cell: configuration, outcome, and both metric sets."""

    alpha: float
    sample: int
    seed: int
    algorithm: str
    runtime_seconds: float
    wall_seconds: float
    error: str
    ei_micro: float | None
    ei_macro: float | None
    causal_emergence: float | None
    macro_node_count: int | None
    largest_group_size: int | None
    accuracy: float | None
    partition: str
    micro: MetricsReport | None
    macro: MetricsReport | None
    macro_grouped_mean_betweenness: float | None
    macro_grouped_mean_eigenvector_centrality: float | None


COLUMNS = (
    "alpha",
    "sample",
    "seed",
    "algorithm",
    "runtime_seconds",
    "wall_seconds",
    "error",
    "ei_micro",
    "ei_macro",
    "causal_emergence",
    "macro_node_count",
    "largest_group_size",
    "accuracy",
    "partition",
    *(f"micro_{name}" for name in _METRIC_FIELDS),
    *(f"macro_{name}" for name in _METRIC_FIELDS),
    "macro_grouped_mean_betweenness",
    "macro_grouped_mean_eigenvector_centrality",
)

# Columns that legitimately differ between reruns of the same sweep.
TIMING_COLUMNS = ("runtime_seconds", "wall_seconds")

_INT_COLUMNS = {
    "sample",
    "seed",
    "macro_node_count",
    "largest_group_size",
    "micro_kernel_dimension",
    "macro_kernel_dimension",
}
_STR_COLUMNS = {"algorithm", "error", "partition"}


def derive_seed(master: int, *key: int) -> int:
    """Stable per-cell seed; independent of which algorithms are enabled."""
    seq = np.random.SeedSequence(master, spawn_key=tuple(key))
    return int(seq.generate_state(1, dtype=np.uint64)[0])


def partition_to_string(part: Partition) -> str:
    return "|".join(" ".join(str(i) for i in group) for group in part.groups)


def partition_from_string(text: str) -> Partition:
    groups = [[int(tok) for tok in chunk.split()] for chunk in text.split("|")]
    n = sum(len(g) for g in groups)
    return Partition.from_groups(groups, n)


def run_algorithm(name: str, net: Network, seed: int = 0) -> MacroResult:
    """Dispatch one search algorithm with its default configuration."""
    if name == "greedy":
        return greedy_search(net)
    if name == "spectral":
        return spectral_search(net)
    if name == "gradient":
        return gradient_search(net, GradConfig(seed=seed))
    raise ValueError(f"unknown algorithm {name!r}")


def _grouped_means(result: MacroResult) -> tuple[float | None, float | None]:
    """Mean betweenness/eigenvector centrality over true macro-nodes only."""
    sizes = np.asarray(result.partition.group_sizes)
    grouped = np.flatnonzero(sizes >= 2)
    if len(grouped) == 0 or result.macro_net.n < 2:
        return None, None
    btw = betweenness(result.macro_net)
    eig = eigenvector_centrality(result.macro_net)
    return float(btw[grouped].mean()), float(eig[grouped].mean())


def _run_cell(
    alpha: float, sample: int, graph_seed: int, algorithm: str, algo_seed: int,
    net: Network, micro: MetricsReport,
) -> RunRecord:
    cpu0 = time.process_time()
    wall0 = time.perf_counter()
    try:
        result = run_algorithm(algorithm, net, algo_seed)
    except Exception as exc:  # noqa: BLE001 - sweep must continue
        return RunRecord(
            alpha=alpha, sample=sample, seed=graph_seed, algorithm=algorithm,
            runtime_seconds=time.process_time() - cpu0,
            wall_seconds=time.perf_counter() - wall0,
            error=f"{type(exc).__name__}: {exc}",
            ei_micro=None, ei_macro=None, causal_emergence=None,
            macro_node_count=None, largest_group_size=None, accuracy=None,
            partition="", micro=micro, macro=None,
            macro_grouped_mean_betweenness=None,
            macro_grouped_mean_eigenvector_centrality=None,
        )
    cpu = time.process_time() - cpu0
    wall = time.perf_counter() - wall0
    macro = metrics_report(result.macro_net) if result.macro_net.n >= 2 else None
    grouped_btw, grouped_eig = _grouped_means(result)
    return RunRecord(
        alpha=alpha, sample=sample, seed=graph_seed, algorithm=algorithm,
        runtime_seconds=cpu, wall_seconds=wall, error="",
        ei_micro=result.ei_micro, ei_macro=result.ei_macro,
        causal_emergence=result.causal_emergence,
        macro_node_count=result.partition.group_count,
        largest_group_size=result.partition.largest_group_size,
        accuracy=result.accuracy,
        partition=partition_to_string(result.partition),
        micro=micro, macro=macro,
        macro_grouped_mean_betweenness=grouped_btw,
        macro_grouped_mean_eigenvector_centrality=grouped_eig,
    )


def _sweep_task(cfg: ExperimentConfig, alpha_index: int, sample: int) -> list[RunRecord]:
    alpha = cfg.alpha_values[alpha_index]
    graph_seed = derive_seed(cfg.seed, alpha_index, sample)
    net = preferential_attachment(
        PAConfig(n=cfg.n, m=cfg.m, alpha=alpha, seed=graph_seed)
    )
    micro = metrics_report(net)
    records = []
    for algorithm in cfg.algorithms:
        algo_seed = derive_seed(cfg.seed, alpha_index, sample, _ALGO_TAGS[algorithm])
        records.append(
            _run_cell(alpha, sample, graph_seed, algorithm, algo_seed, net, micro)
        )
    return records


def run_sweep(cfg: ExperimentConfig) -> list[RunRecord]:
    """All (alpha, sample, algorithm) cells, in deterministic order.

    With workers > 1 the (alpha, sample) tasks run in separate processes;
    records are merged back in configuration order regardless of completion
    order. Use workers = 1 when comparing runtimes.
    """
    cells = [
        (ai, sample)
        for ai in range(len(cfg.alpha_values))
        for sample in range(cfg.samples)
    ]
    if cfg.workers == 1:
        chunks = [_sweep_task(cfg, ai, sample) for ai, sample in cells]
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            futures = [pool.submit(_sweep_task, cfg, ai, s) for ai, s in cells]
            chunks = [f.result() for f in futures]
    return [record for chunk in chunks for record in chunk]


def _format_value(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def record_to_row(record: RunRecord) -> list[str]:
    row = []
    for column in COLUMNS:
        if column.startswith("micro_"):
            report = record.micro
            value = getattr(report, column[6:]) if report is not None else None
        elif column.startswith("macro_") and column[6:] in _METRIC_FIELDS:
            report = record.macro
            value = getattr(report, column[6:]) if report is not None else None
        else:
            value = getattr(record, column)
        row.append(_format_value(value))
    return row


def _parse_scalar(column: str, text: str) -> object:
    if column in _STR_COLUMNS:
        return text
    if text == "":
        return None
    if column in _INT_COLUMNS:
        return int(text)
    return float(text)


def record_from_row(row: list[str]) -> RunRecord:
    values = dict(zip(COLUMNS, row, strict=True))
    parsed = {c: _parse_scalar(c, v) for c, v in values.items()}

    def build_report(prefix: str) -> MetricsReport | None:
        fields = {name: parsed[f"{prefix}{name}"] for name in _METRIC_FIELDS}
        if all(v is None for v in fields.values()):
            return None
        return MetricsReport(**fields)

    kwargs = {
        c: parsed[c]
        for c in COLUMNS
        if not (c.startswith("micro_") or (c.startswith("macro_") and c[6:] in _METRIC_FIELDS))
    }
    return RunRecord(micro=build_report("micro_"), macro=build_report("macro_"), **kwargs)


def write_runs_csv(records: list[RunRecord], path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(COLUMNS)
        for record in records:
            writer.writerow(record_to_row(record))


def read_runs_csv(path: str | Path) -> list[RunRecord]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if tuple(header) != COLUMNS:
            raise ValueError(f"{path}: unexpected CSV header")
        return [record_from_row(row) for row in reader]


_SUMMARY_SKIP = {"alpha", "sample", "seed", "algorithm", "error", "partition"}


def write_summary_csv(records: list[RunRecord], path: str | Path) -> None:
    """Per-(alpha, algorithm) means and standard deviations of numeric columns."""
    numeric = [c for c in COLUMNS if c not in _SUMMARY_SKIP]
    groups: dict[tuple[float, str], list[RunRecord]] = {}
    for record in records:
        groups.setdefault((record.alpha, record.algorithm), []).append(record)

    header = ["alpha", "algorithm", "samples_ok", "samples_failed"]
    for column in numeric:
        header += [f"{column}_mean", f"{column}_std"]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for (alpha, algorithm), members in groups.items():
            ok = [r for r in members if not r.error]
            row = [repr(alpha), algorithm, str(len(ok)), str(len(members) - len(ok))]
            rows = [record_to_row(r) for r in ok]
            index = {c: i for i, c in enumerate(COLUMNS)}
            for column in numeric:
                vals = [float(r[index[column]]) for r in rows if r[index[column]] != ""]
                if vals:
                    arr = np.asarray(vals)
                    row += [repr(float(arr.mean())), repr(float(arr.std()))]
                else:
                    row += ["", ""]
            writer.writerow(row)


def execute_sweep(cfg: ExperimentConfig) -> tuple[Path, Path]:
    """Run the sweep and write runs.csv and summary.csv to the output dir."""
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    records = run_sweep(cfg)
    runs_path = out / "runs.csv"
    summary_path = out / "summary.csv"
    write_runs_csv(records, runs_path)
    write_summary_csv(records, summary_path)
    return runs_path, summary_path


_CONFIG_KEYS = {
    "alpha_values": lambda s: tuple(float(tok) for tok in s.replace(",", " ").split()),
    "n": int,
    "m": int,
    "samples": int,
    "algorithms": lambda s: tuple(tok for tok in s.replace(",", " ").split()),
    "seed": int,
    "output_dir": str,
    "workers": int,
}


def parse_config_file(path: str | Path) -> ExperimentConfig:
    """Flat ``key = value`` sweep configuration; '#' starts a comment line."""
    values: dict[str, object] = {}
    for lineno, raw in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value'")
        key, _, text = line.partition("=")
        key = key.strip()
        if key not in _CONFIG_KEYS:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            values[key] = _CONFIG_KEYS[key](text.strip())
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: bad value for {key!r}") from exc
    if "alpha_values" not in values:
        raise ValueError(f"{path}: missing required key 'alpha_values'")
    return ExperimentConfig(**values)  # type: ignore[arg-type]
