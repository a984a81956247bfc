"""Command-line entry point: ``haarwalk <experiment> [options]``.

Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import re
import sys

import numpy as np

from .circuits import Chain1D, CircuitSpec, Grid2D
from .dyson import DysonConfig
from .experiments import (EXPERIMENTS, ExperimentConfig, run_experiment,
                          series_to_csv_text, series_to_json_text, write_series)
from .rng import RngSeed

_GRID_PATTERN = re.compile(r"^grid[\s:]?(\d+)x(\d+)$")


def parse_topology(text: str):
    """Parse '--topology chain' or '--topology "grid RxC"' (also gridRxC, grid:RxC)."""
    cleaned = text.strip().lower()
    if cleaned == "chain":
        return Chain1D()
    match = _GRID_PATTERN.match(cleaned)
    if match:
        return Grid2D(rows=int(match.group(1)), cols=int(match.group(2)))
    raise ValueError(f"unrecognized topology {text!r}; use 'chain' or 'grid RxC'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="haarwalk",
        description="Random walks on the unitary group: seeded convergence experiments",
    )
    sub = parser.add_subparsers(dest="experiment", required=True, metavar="experiment")

    def common(p):
        p.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
        p.add_argument("--format", choices=("csv", "json"), default="csv",
                       help="output format (default csv)")
        p.add_argument("--out", default=None, metavar="PATH",
                       help="output file; stdout when omitted")

    p = sub.add_parser("cutoff", help="entropy (and optional Wasserstein) vs depth")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--cycles", type=int, required=True)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--topology", default="chain")
    p.add_argument("--wasserstein", action="store_true",
                   help="also track W1 of the circuit eigenphases to a fixed reference")
    p.add_argument("--per-gate", action="store_true",
                   help="record one row per gate event instead of per cycle")
    p.add_argument("--final-layer", action="store_true",
                   help="append the trailing single-qubit layer")
    common(p)

    p = sub.add_parser("qft-invariance", help="entropies before/after the QFT")
    p.add_argument("--qubits", type=int, default=None,
                   help="qubit count; enables the random-circuit state rows")
    p.add_argument("--cycles", type=int, default=20,
                   help="circuit depth for the circuit state rows (default 20)")
    p.add_argument("--dim", type=int, default=None,
                   help="state dimension (power of two) when run without --qubits")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--topology", default="chain")
    common(p)

    p = sub.add_parser("porter-thomas", help="scaled-probability histogram and KS fit")
    p.add_argument("--dim", type=int, default=256,
                   help="state dimension for the haar source (default 256)")
    p.add_argument("--source", choices=("haar", "circuit"), default="haar")
    p.add_argument("--qubits", type=int, default=None, help="qubits for --source circuit")
    p.add_argument("--cycles", type=int, default=20, help="cycles for --source circuit")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--bins", type=int, default=40, help="histogram bins (default 40)")
    p.add_argument("--topology", default="chain")
    common(p)

    p = sub.add_parser("dyson", help="continuous-walk trajectories and entropy")
    p.add_argument("--dim", type=int, default=20)
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--dt", type=float, default=0.01)
    p.add_argument("--steps", type=int, default=60000,
                   help="update count; the default is long enough to show the plateau")
    p.add_argument("--renormalize-every", type=int, default=None, metavar="R",
                   help="re-unitarize by QR every R steps (default: never)")
    p.add_argument("--integrator", choices=("taylor2", "exact"), default="taylor2")
    common(p)

    return parser


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    seed = RngSeed(args.seed)
    kwargs = dict(experiment=args.experiment, seed=seed,
                  out_format=args.format, out_path=args.out)

    if args.experiment == "cutoff":
        spec = CircuitSpec(num_qubits=args.qubits, num_cycles=args.cycles,
                           seed=seed, topology=parse_topology(args.topology),
                           final_single_qubit_layer=args.final_layer)
        return ExperimentConfig(trials=args.trials, circuit=spec,
                                wasserstein=args.wasserstein, per_gate=args.per_gate,
                                **kwargs)

    if args.experiment == "qft-invariance":
        spec = None
        if args.qubits is not None:
            spec = CircuitSpec(num_qubits=args.qubits, num_cycles=args.cycles,
                               seed=seed, topology=parse_topology(args.topology))
        return ExperimentConfig(trials=args.trials, circuit=spec, dim=args.dim, **kwargs)

    if args.experiment == "porter-thomas":
        spec = None
        if args.source == "circuit":
            if args.qubits is None:
                raise ValueError("--source circuit needs --qubits")
            spec = CircuitSpec(num_qubits=args.qubits, num_cycles=args.cycles,
                               seed=seed, topology=parse_topology(args.topology))
        return ExperimentConfig(trials=args.trials, circuit=spec, dim=args.dim,
                                source=args.source, histogram_bins=args.bins, **kwargs)

    dys = DysonConfig(dim=args.dim, steps=args.steps, sigma=args.sigma, dt=args.dt,
                      renormalize_every=args.renormalize_every,
                      integrator=args.integrator, seed=seed)
    return ExperimentConfig(dyson=dys, **kwargs)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
    except ValueError as exc:
        print(f"haarwalk: configuration error: {exc}", file=sys.stderr)
        return 2
    try:
        series = run_experiment(cfg)
    except (np.linalg.LinAlgError, ArithmeticError) as exc:
        # LinAlgError subclasses ValueError, so it must be handled first
        print(f"haarwalk: numerical failure: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"haarwalk: configuration error: {exc}", file=sys.stderr)
        return 2
    if cfg.out_path is None:
        text = (series_to_csv_text(series) if cfg.out_format == "csv"
                else series_to_json_text(series))
        sys.stdout.write(text)
    else:
        write_series(series, cfg.out_path, cfg.out_format)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
