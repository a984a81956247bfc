"""Random walks on the unitary group and their convergence diagnostics."""

from .circuits import (Chain1D, CircuitSpec, GateEvent, Grid2D,
                       build_random_circuit, circuit_to_matrix, run_circuit)
from .dyson import (DysonConfig, DysonFrame, crossing_step, dyson_step,
                    exact_propagator, run_dyson, taylor2_propagator)
from .ensembles import (sample_ginibre, sample_haar_state, sample_haar_unitary,
                        sample_hermitian, unitarize)
from .entropy import (EntropyRecord, entropic_uncertainty, haar_mean_entropy,
                      ks_critical_value, ks_statistic, porter_thomas_cdf,
                      porter_thomas_fit, porter_thomas_pdf, probabilities_of,
                      shannon_entropy)
from .experiments import (EXPERIMENTS, ExperimentConfig, ExperimentSeries,
                          exp_cutoff_circuit, exp_dyson, exp_porter_thomas,
                          exp_qft_invariance, run_experiment, series_to_csv_text,
                          series_to_json_text, write_series)
from .gates import (SINGLE_QUBIT_GATES, SQRT_W, SQRT_X, SQRT_Y, fsim_matrix)
from .rng import RngSeed
from .spectral import (TrajectoryFrame, eigenphases, match_trajectories,
                       unitarity_defect, wasserstein_order_stat, wasserstein_to_cue)
from .statevector import (apply_fsim, apply_single_qubit, basis_state,
                          load_amplitudes, norm_defect, qft, qft_inverse,
                          save_amplitudes, uniform_state)

__all__ = [
    "Chain1D", "CircuitSpec", "GateEvent", "Grid2D",
    "build_random_circuit", "circuit_to_matrix", "run_circuit",
    "DysonConfig", "DysonFrame", "crossing_step", "dyson_step",
    "exact_propagator", "run_dyson", "taylor2_propagator",
    "sample_ginibre", "sample_haar_state", "sample_haar_unitary",
    "sample_hermitian", "unitarize",
    "EntropyRecord", "entropic_uncertainty", "haar_mean_entropy",
    "ks_critical_value", "ks_statistic", "porter_thomas_cdf",
    "porter_thomas_fit", "porter_thomas_pdf", "probabilities_of",
    "shannon_entropy",
    "EXPERIMENTS", "ExperimentConfig", "ExperimentSeries",
    "exp_cutoff_circuit", "exp_dyson", "exp_porter_thomas",
    "exp_qft_invariance", "run_experiment", "series_to_csv_text",
    "series_to_json_text", "write_series",
    "SINGLE_QUBIT_GATES", "SQRT_W", "SQRT_X", "SQRT_Y", "fsim_matrix",
    "RngSeed",
    "TrajectoryFrame", "eigenphases", "match_trajectories",
    "unitarity_defect", "wasserstein_order_stat", "wasserstein_to_cue",
    "apply_fsim", "apply_single_qubit", "basis_state", "load_amplitudes",
    "norm_defect", "qft", "qft_inverse", "save_amplitudes", "uniform_state",
]

__version__ = "0.1.0"
