"""Seeded experiment drivers and their CSV/JSON serialization.

Every experiment is a pure function of its ExperimentConfig (seed included):
rerunning an identical config reproduces the output byte for byte. Trials
are reduced in trial order, so the results do not depend on scheduling.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .circuits import (MAX_MATRIX_QUBITS, Chain1D, CircuitSpec, Grid2D,
                       build_random_circuit, run_circuit)
from .dyson import DysonConfig, crossing_step, run_dyson
from .ensembles import sample_haar_state, sample_haar_unitary
from .entropy import (entropic_uncertainty, haar_mean_entropy, ks_critical_value,
                      ks_statistic, porter_thomas_cdf, porter_thomas_fit,
                      porter_thomas_pdf, probabilities_of, shannon_entropy)
from .rng import RngSeed
from .spectral import eigenphases, wasserstein_to_cue
from .statevector import basis_state, qft, uniform_state

EXPERIMENTS = ("cutoff", "qft-invariance", "porter-thomas", "dyson")

MAX_STATEVECTOR_QUBITS = 24

# Scaled probabilities N*p are pooled into a fixed histogram window so the
# binning never depends on the sampled maximum.
HISTOGRAM_RANGE = (0.0, 10.0)


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything one experiment run depends on."""

    experiment: str
    seed: RngSeed = RngSeed(0)
    trials: int = 100
    circuit: CircuitSpec | None = None
    dyson: DysonConfig | None = None
    dim: int | None = None
    wasserstein: bool = False
    per_gate: bool = False
    source: str = "haar"
    histogram_bins: int = 40
    out_format: str = "csv"
    out_path: str | None = None

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise ValueError(f"unknown experiment {self.experiment!r}; "
                             f"expected one of {', '.join(EXPERIMENTS)}")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.out_format not in ("csv", "json"):
            raise ValueError("format must be csv or json")
        if self.source not in ("haar", "circuit"):
            raise ValueError("source must be haar or circuit")
        if self.histogram_bins < 1:
            raise ValueError("histogram_bins must be at least 1")


@dataclass
class ExperimentSeries:
    """Tabular result of one experiment plus its reproducibility metadata."""

    experiment: str
    columns: tuple
    records: list
    metadata: dict = field(default_factory=dict)


def run_experiment(cfg: ExperimentConfig) -> ExperimentSeries:
    """Dispatch a config to its experiment driver."""
    driver = {
        "cutoff": exp_cutoff_circuit,
        "qft-invariance": exp_qft_invariance,
        "porter-thomas": exp_porter_thomas,
        "dyson": exp_dyson,
    }[cfg.experiment]
    return driver(cfg)


# ---------------------------------------------------------------------------
# cutoff: entropy (and optionally Wasserstein) versus circuit depth


def exp_cutoff_circuit(cfg: ExperimentConfig) -> ExperimentSeries:
    """Trial-averaged state entropy per cycle, plus the order-1 Wasserstein
    distance of the partial circuit's eigenphases to a fixed reference
    unitary when enabled."""
    spec = _require_circuit(cfg)
    n = spec.num_qubits
    dim = 2 ** n
    if cfg.wasserstein and n > MAX_MATRIX_QUBITS:
        raise ValueError(f"wasserstein tracking needs num_qubits <= {MAX_MATRIX_QUBITS}")
    if n > MAX_STATEVECTOR_QUBITS:
        raise ValueError(f"entropy tracking needs num_qubits <= {MAX_STATEVECTOR_QUBITS}")

    reference = None
    if cfg.wasserstein:
        reference = eigenphases(sample_haar_unitary(dim, cfg.seed.child(0)))

    trial_seeds = cfg.seed.child(1)
    groups0 = _event_groups(build_random_circuit(spec), cfg.per_gate)
    gates = np.cumsum([0] + [len(g) for g in groups0])
    rows = len(groups0) + 1

    ent = np.zeros(rows)
    ent_qft = np.zeros(rows)
    w1 = np.zeros(rows) if cfg.wasserstein else None
    for t in range(cfg.trials):
        events = build_random_circuit(replace(spec, seed=trial_seeds.child(t)))
        groups = _event_groups(events, cfg.per_gate)
        psi = basis_state(dim)
        u = np.eye(dim, dtype=complex) if cfg.wasserstein else None
        for row, group in enumerate([[]] + groups):
            if group:
                psi = run_circuit(psi, group)
                if u is not None:
                    u = run_circuit(u, group)
            p = probabilities_of(psi)
            ent[row] += shannon_entropy(p)
            ent_qft[row] += shannon_entropy(probabilities_of(qft(psi)))
            if u is not None:
                w1[row] += wasserstein_to_cue(eigenphases(u), reference)
    ent /= cfg.trials
    ent_qft /= cfg.trials
    if w1 is not None:
        w1 /= cfg.trials

    columns = ["step", "gates", "entropy", "entropy_qft"]
    if cfg.wasserstein:
        columns.append("wasserstein_w1")
    records = []
    for row in range(rows):
        rec = [row, int(gates[row]), float(ent[row]), float(ent_qft[row])]
        if cfg.wasserstein:
            rec.append(float(w1[row]))
        records.append(tuple(rec))

    ref_entropy = haar_mean_entropy(dim)
    cutoff = next((row for row in range(rows) if ent[row] >= 0.95 * ref_entropy), None)
    metadata = {
        "config": config_echo(cfg),
        "reference_entropy": ref_entropy,
        "cutoff_step": cutoff,
    }
    if cfg.wasserstein:
        metadata["cue_reference_phases"] = [float(x) for x in reference]
    series = ExperimentSeries("cutoff", tuple(columns), records, metadata)
    _check_series_monotonicity(series)
    return series


def _event_groups(events, per_gate: bool) -> list:
    if per_gate:
        return [[ev] for ev in events]
    groups: dict = {}
    for ev in events:
        groups.setdefault(ev.cycle, []).append(ev)
    return [groups[c] for c in sorted(groups)]


# ---------------------------------------------------------------------------
# qft-invariance: entropies before/after the QFT for reference states


def exp_qft_invariance(cfg: ExperimentConfig) -> ExperimentSeries:
    """Computational and Fourier entropies for the uniform state, Haar
    states, and (when a circuit spec is given) random-circuit states."""
    if cfg.circuit is not None:
        dim = 2 ** cfg.circuit.num_qubits
    elif cfg.dim is not None:
        dim = cfg.dim
    else:
        raise ValueError("qft-invariance needs a circuit spec or a dimension")
    if dim < 2 or (dim & (dim - 1)) != 0:
        raise ValueError("dimension must be a power of two")

    records = []

    def add(state_label, trial, amps):
        rec = entropic_uncertainty(amps)
        records.append((state_label, trial, rec.h_computational, rec.h_qft,
                        rec.uncertainty_sum, rec.bound))

    add("uniform", 0, uniform_state(dim))
    haar_seeds = cfg.seed.child(0)
    for t in range(cfg.trials):
        add("haar", t, sample_haar_state(dim, haar_seeds.child(t)))
    if cfg.circuit is not None:
        circuit_seeds = cfg.seed.child(1)
        for t in range(cfg.trials):
            spec = replace(cfg.circuit, seed=circuit_seeds.child(t))
            psi = run_circuit(basis_state(dim), build_random_circuit(spec))
            add("circuit", t, psi)

    metadata = {
        "config": config_echo(cfg),
        "bound": math.log(dim),
        "reference_entropy": haar_mean_entropy(dim),
    }
    columns = ("state", "trial", "h_computational", "h_qft", "uncertainty_sum", "bound")
    return ExperimentSeries("qft-invariance", columns, records, metadata)


# ---------------------------------------------------------------------------
# porter-thomas: scaled-probability histogram and KS statistics


def exp_porter_thomas(cfg: ExperimentConfig) -> ExperimentSeries:
    """Histogram of N*p pooled over trials plus per-trial and pooled KS
    statistics against the chi-square amplitude law."""
    if cfg.source == "circuit":
        spec = _require_circuit(cfg)
        dim = 2 ** spec.num_qubits
    else:
        if cfg.dim is None:
            raise ValueError("porter-thomas with the haar source needs a dimension")
        dim = cfg.dim
    if dim < 16:
        raise ValueError("porter-thomas needs dimension >= 16")

    state_seeds = cfg.seed.child(0)
    pooled = []
    ks_trials = []
    for t in range(cfg.trials):
        if cfg.source == "circuit":
            trial_spec = replace(cfg.circuit, seed=state_seeds.child(t))
            psi = run_circuit(basis_state(dim), build_random_circuit(trial_spec))
        else:
            psi = sample_haar_state(dim, state_seeds.child(t))
        p = probabilities_of(psi)
        ks_trials.append(porter_thomas_fit(p))
        pooled.append(p)
    pooled = np.concatenate(pooled)
    scaled = dim * pooled

    lo, hi = HISTOGRAM_RANGE
    edges = np.linspace(lo, hi, cfg.histogram_bins + 1)
    counts, _ = np.histogram(scaled, bins=edges)
    width = edges[1] - edges[0]
    total = scaled.size
    centers = (edges[:-1] + edges[1:]) / 2
    reference = porter_thomas_pdf(np.minimum(centers / dim, 1.0), dim) / dim

    records = []
    for b in range(cfg.histogram_bins):
        records.append((float(edges[b]), float(edges[b + 1]), int(counts[b]),
                        float(counts[b] / (total * width)), float(reference[b])))

    critical = ks_critical_value(dim)
    metadata = {
        "config": config_echo(cfg),
        "dim": dim,
        "ks_per_trial": [float(k) for k in ks_trials],
        "ks_critical_5pct": critical,
        "pass_rate": float(np.mean([k < critical for k in ks_trials])),
        "ks_pooled": ks_statistic(pooled, lambda x: porter_thomas_cdf(x, dim)),
        "overflow_count": int(np.sum(scaled > hi)),
    }
    columns = ("bin_left", "bin_right", "count", "empirical_density", "reference_density")
    return ExperimentSeries("porter-thomas", columns, records, metadata)


# ---------------------------------------------------------------------------
# dyson: continuous-walk frames


def exp_dyson(cfg: ExperimentConfig) -> ExperimentSeries:
    """Per-frame time, entropy, unitarity defect, and the matched
    eigenphase trajectories of one continuous-walk run."""
    if cfg.dyson is None:
        raise ValueError("dyson experiment needs a dyson configuration")
    dys = replace(cfg.dyson, seed=cfg.seed)
    frames = run_dyson(dys)

    columns = ["step", "time", "entropy", "unitarity_defect"]
    columns += [f"phase_{i}" for i in range(dys.dim)]
    records = []
    for k, frame in enumerate(frames):
        rec = [k, float(frame.time), float(frame.entropy), float(frame.unitarity_defect)]
        rec += [float(x) for x in frame.phases.phases]
        records.append(tuple(rec))

    ref_entropy = haar_mean_entropy(dys.dim)
    metadata = {
        "config": config_echo(cfg),
        "reference_entropy": ref_entropy,
        "crossing_step": crossing_step([f.entropy for f in frames], ref_entropy),
    }
    return ExperimentSeries("dyson", tuple(columns), records, metadata)


# ---------------------------------------------------------------------------
# serialization


def series_to_csv_text(series: ExperimentSeries) -> str:
    """Render a series as CSV: '#' metadata lines, a header row, then records.

    Floats carry 17 significant digits so values round-trip exactly.
    """
    lines = [f"# experiment={series.experiment}"]
    for key, value in series.metadata.items():
        lines.append(f"# {key}={json.dumps(value, separators=(',', ':'))}")
    lines.append(",".join(series.columns))
    for rec in series.records:
        lines.append(",".join(_format_cell(v) for v in rec))
    return "\n".join(lines) + "\n"


def series_to_json_text(series: ExperimentSeries) -> str:
    """Render a series as JSON mirroring the CSV records plus the config echo."""
    payload = {
        "experiment": series.experiment,
        "columns": list(series.columns),
        "metadata": series.metadata,
        "records": [list(rec) for rec in series.records],
    }
    return json.dumps(payload, indent=2) + "\n"


def write_series(series: ExperimentSeries, path, fmt: str = "csv") -> None:
    """Write a series to disk in the requested format."""
    if fmt == "csv":
        text = series_to_csv_text(series)
    elif fmt == "json":
        text = series_to_json_text(series)
    else:
        raise ValueError("format must be csv or json")
    Path(path).write_text(text)


def _format_cell(value) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def config_echo(cfg: ExperimentConfig) -> dict:
    """JSON-serializable echo of a config, embedded in every output."""
    echo = {
        "experiment": cfg.experiment,
        "seed": {"seed": cfg.seed.seed, "stream_id": cfg.seed.stream_id},
        "trials": cfg.trials,
        "out_format": cfg.out_format,
    }
    if cfg.dim is not None:
        echo["dim"] = cfg.dim
    if cfg.experiment == "cutoff":
        echo["wasserstein"] = cfg.wasserstein
        echo["per_gate"] = cfg.per_gate
    if cfg.experiment == "porter-thomas":
        echo["source"] = cfg.source
        echo["histogram_bins"] = cfg.histogram_bins
    if cfg.circuit is not None:
        spec = cfg.circuit
        echo["circuit"] = {
            "num_qubits": spec.num_qubits,
            "num_cycles": spec.num_cycles,
            "topology": _topology_echo(spec.topology),
            "pattern_sequence": list(spec.patterns),
            "final_single_qubit_layer": spec.final_single_qubit_layer,
            "forbid_repeats": spec.forbid_repeats,
            "fsim_theta": spec.fsim_theta,
            "fsim_phi": spec.fsim_phi,
        }
    if cfg.dyson is not None:
        dys = cfg.dyson
        echo["dyson"] = {
            "dim": dys.dim,
            "steps": dys.steps,
            "sigma": dys.sigma,
            "dt": dys.dt,
            "hbar": dys.hbar,
            "renormalize_every": dys.renormalize_every,
            "integrator": dys.integrator,
        }
    return echo


def _topology_echo(topology) -> dict:
    if isinstance(topology, Grid2D):
        return {"kind": "grid", "rows": topology.rows, "cols": topology.cols}
    if isinstance(topology, Chain1D):
        return {"kind": "chain"}
    raise ValueError(f"unknown topology {topology!r}")


def _require_circuit(cfg: ExperimentConfig) -> CircuitSpec:
    if cfg.circuit is None:
        raise ValueError(f"{cfg.experiment} needs a circuit spec")
    return cfg.circuit


def _check_series_monotonicity(series: ExperimentSeries) -> None:
    steps = [rec[0] for rec in series.records]
    gates = [rec[1] for rec in series.records]
    if any(b <= a for a, b in zip(steps, steps[1:])):
        raise AssertionError("step indices must be strictly increasing")
    if any(b < a for a, b in zip(gates, gates[1:])):
        raise AssertionError("gate counts must be non-decreasing")
