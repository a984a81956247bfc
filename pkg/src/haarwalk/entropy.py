"""Shannon entropy, the chi-square amplitude law, and entropic uncertainty.

Entropies are in nats throughout. 0 ln 0 counts as 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .statevector import qft

EULER_GAMMA = 0.57721566490153286

_PROB_SUM_ATOL = 1e-10
_STATE_NORM_ATOL = 1e-8


def probabilities_of(state: np.ndarray) -> np.ndarray:
    """Measurement probabilities |a_i|^2 of a normalized state.

    Inputs whose squared norm deviates from 1 by more than 1e-8 are
    rejected; accepted inputs are divided by the squared norm so the result
    sums to 1 at full precision.
    """
    amps = np.asarray(state, dtype=complex)
    p = np.abs(amps) ** 2
    total = p.sum()
    if abs(total - 1.0) > _STATE_NORM_ATOL:
        raise ValueError(f"state is not normalized (norm defect {abs(total - 1.0):.3g})")
    return p / total


def _checked_probabilities(p) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.ndim != 1 or p.size == 0:
        raise ValueError("probability vector must be one-dimensional and non-empty")
    if np.any(p < -1e-12):
        raise ValueError("probabilities must be non-negative")
    if abs(p.sum() - 1.0) > _PROB_SUM_ATOL:
        raise ValueError("probabilities must sum to 1")
    return np.clip(p, 0.0, None)


def shannon_entropy(p) -> float:
    """-sum p_i ln p_i in nats."""
    p = _checked_probabilities(p)
    nz = p[p > 0.0]
    return float(-(nz * np.log(nz)).sum() + 0.0)  # + 0.0 folds away -0.0


def haar_mean_entropy(dim: int) -> float:
    """Mean entropy of Haar-random states in the large-N form ln N - 1 + gamma."""
    if dim < 2:
        raise ValueError("dimension must be at least 2")
    return math.log(dim) - 1.0 + EULER_GAMMA


def porter_thomas_pdf(p, dim: int):
    """Density (N-1)(1-p)^(N-2) of a squared amplitude of a Haar state."""
    if dim < 2:
        raise ValueError("dimension must be at least 2")
    arr = np.asarray(p, dtype=float)
    if np.any(arr < 0) or np.any(arr > 1):
        raise ValueError("probability argument must lie in [0, 1]")
    out = (dim - 1) * (1.0 - arr) ** (dim - 2)
    return float(out) if np.isscalar(p) else out


def porter_thomas_cdf(p, dim: int):
    """CDF 1 - (1-p)^(N-1) matching :func:`porter_thomas_pdf`."""
    if dim < 2:
        raise ValueError("dimension must be at least 2")
    arr = np.asarray(p, dtype=float)
    if np.any(arr < 0) or np.any(arr > 1):
        raise ValueError("probability argument must lie in [0, 1]")
    out = 1.0 - (1.0 - arr) ** (dim - 1)
    return float(out) if np.isscalar(p) else out


def ks_statistic(samples, cdf) -> float:
    """Kolmogorov-Smirnov sup distance between a sample and a CDF callable."""
    x = np.sort(np.asarray(samples, dtype=float))
    n = len(x)
    if n == 0:
        raise ValueError("empty sample")
    f = np.asarray(cdf(x), dtype=float)
    i = np.arange(1, n + 1)
    return float(max((i / n - f).max(), (f - (i - 1) / n).max()))


def ks_critical_value(num_samples: int, alpha: float = 0.05) -> float:
    """Asymptotic two-sided KS critical value sqrt(-ln(alpha/2) / (2 n))."""
    if num_samples < 1:
        raise ValueError("need at least one sample")
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0, 1)")
    return math.sqrt(-math.log(alpha / 2.0) / (2.0 * num_samples))


def porter_thomas_fit(p) -> float:
    """KS statistic of a probability vector against the chi-square amplitude law.

    Compares the empirical CDF of the entries {p_i} with 1 - (1-p)^(N-1),
    N being the vector length. A degenerate vector (all mass on one index)
    simply scores close to 1; it is not an error.
    """
    p = _checked_probabilities(p)
    return ks_statistic(p, lambda x: porter_thomas_cdf(x, len(p)))


@dataclass(frozen=True)
class EntropyRecord:
    """Entropies of one state in the computational and Fourier bases."""

    h_computational: float
    h_qft: float
    uncertainty_sum: float
    bound: float


def entropic_uncertainty(state) -> EntropyRecord:
    """Entropy in the computational basis, after the QFT, their sum, and ln N.

    The computational and Fourier bases are mutually unbiased (overlap
    1/sqrt(N)), so the uncertainty bound -2 ln c equals ln N.
    """
    amps = np.asarray(state, dtype=complex)
    h_p = shannon_entropy(probabilities_of(amps))
    h_q = shannon_entropy(probabilities_of(qft(amps)))
    return EntropyRecord(
        h_computational=h_p,
        h_qft=h_q,
        uncertainty_sum=h_p + h_q,
        bound=math.log(amps.shape[0]),
    )
