"""Command-line interface: generate, ei, coarsen, metrics, sweep."""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from .coarse import causal_emergence, read_partition, write_partition
from .generators import PAConfig, complete, cycle, erdos_renyi, preferential_attachment, star
from .gradient import GradConfig, gradient_search
from .greedy import GreedyConfig, greedy_search
from .harness import execute_sweep, parse_config_file
from .ei import effective_information
from .metrics import metrics_report
from .network import normalize, read_edge_list, write_edge_list
from .spectral import OpticsConfig, spectral_search


def _json_ready(value: object) -> object:
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: _json_ready(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, float):
        return None if value != value else value  # NaN -> null
    return value


def _emit(payload: object) -> None:
    print(json.dumps(_json_ready(payload), indent=2))


def _read_kv_file(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value'")
        key, _, text = line.partition("=")
        values[key.strip()] = text.strip()
    return values


def _algorithm_config(name: str, path: str | None):
    raw = _read_kv_file(path) if path else {}
    try:
        if name == "greedy":
            known = {"min_gain": float, "node_order": str, "seed": int}
            return GreedyConfig(**{k: known[k](v) for k, v in raw.items()})
        if name == "spectral":
            known = {"min_samples": int, "epsilon_grid": int, "max_eps": float}
            return OpticsConfig(**{k: known[k](v) for k, v in raw.items()})
        known = {
            "learning_rate": float, "momentum": float, "max_iter": int,
            "restarts": int, "converge_tol": float, "seed": int, "mass_tol": float,
        }
        return GradConfig(**{k: known[k](v) for k, v in raw.items()})
    except KeyError as exc:
        raise ValueError(f"unknown {name} config key {exc.args[0]!r}") from exc


def _cmd_generate(args: argparse.Namespace) -> int:
    if args.model == "pa":
        net = preferential_attachment(
            PAConfig(n=args.n, m=args.m, alpha=args.alpha, seed=args.seed)
        )
    elif args.model == "star":
        net = star(args.n)
    elif args.model == "cycle":
        net = cycle(args.n)
    elif args.model == "complete":
        net = complete(args.n)
    else:
        net = erdos_renyi(args.n, args.p, args.seed)
    write_edge_list(net, args.out)
    return 0


def _cmd_ei(args: argparse.Namespace) -> int:
    net = normalize(read_edge_list(args.network))
    _emit(effective_information(net))
    return 0


def _cmd_coarsen(args: argparse.Namespace) -> int:
    net = normalize(read_edge_list(args.network))
    cfg = _algorithm_config(args.algorithm, args.config)
    if args.algorithm == "greedy":
        result = greedy_search(net, cfg)
    elif args.algorithm == "spectral":
        result = spectral_search(net, cfg)
    else:
        result = gradient_search(net, cfg)
    payload = {
        "algorithm": args.algorithm,
        "partition": [list(group) for group in result.partition.groups],
        "ei_micro": result.ei_micro,
        "ei_macro": result.ei_macro,
        "causal_emergence": result.causal_emergence,
        "accuracy": result.accuracy,
        "macro_node_count": result.partition.group_count,
        "largest_group_size": result.partition.largest_group_size,
    }
    _emit(payload)
    if args.macro_out:
        write_edge_list(result.macro_net, args.macro_out)
    if args.partition_out:
        write_partition(result.partition, args.partition_out)
    return 0


def _cmd_metrics(args: argparse.Namespace) -> int:
    net = normalize(read_edge_list(args.network))
    if args.partition:
        from .coarse import coarse_grain
        from .network import stationary

        part = read_partition(args.partition, net.n)
        net = coarse_grain(net, stationary(net), part)
    _emit(metrics_report(net))
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    cfg = parse_config_file(args.config)
    runs_path, summary_path = execute_sweep(cfg)
    print(f"wrote {runs_path} and {summary_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="macroscale",
        description="Effective information and macroscale search for networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a generated network as an edge list")
    gen.add_argument("--model", required=True, choices=("pa", "star", "cycle", "complete", "er"))
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--m", type=int, default=1)
    gen.add_argument("--alpha", type=float, default=1.0)
    gen.add_argument("--p", type=float, default=0.5)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=_cmd_generate)

    ei_cmd = sub.add_parser("ei", help="effective information of an edge-list network")
    ei_cmd.add_argument("network")
    ei_cmd.set_defaults(func=_cmd_ei)

    coarsen = sub.add_parser("coarsen", help="search for an informative macroscale")
    coarsen.add_argument("network")
    coarsen.add_argument("--algorithm", required=True, choices=("greedy", "spectral", "gradient"))
    coarsen.add_argument("--config", help="flat key=value algorithm configuration file")
    coarsen.add_argument("--macro-out", help="write the macro network edge list here")
    coarsen.add_argument("--partition-out", help="write the partition file here")
    coarsen.set_defaults(func=_cmd_coarsen)

    met = sub.add_parser("metrics", help="network properties at micro or macro scale")
    met.add_argument("network")
    met.add_argument("--partition", help="partition file; metrics are computed on the macro network")
    met.set_defaults(func=_cmd_metrics)

    sweep = sub.add_parser("sweep", help="run a preferential-attachment experiment sweep")
    sweep.add_argument("--config", required=True)
    sweep.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
