"""Eigenphases of unitaries, order-statistics Wasserstein distances,
and index-matched eigenvalue trajectories."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

DEFAULT_UNITARITY_TOL = 1e-6

_TWO_PI = 2.0 * np.pi


def unitarity_defect(matrix: np.ndarray) -> float:
    """max |(U†U - I)_ij| of a square matrix."""
    u = np.asarray(matrix, dtype=complex)
    return float(np.abs(u.conj().T @ u - np.eye(u.shape[0])).max())


def eigenphases(matrix: np.ndarray, max_defect: float = DEFAULT_UNITARITY_TOL) -> np.ndarray:
    """Sorted eigenvalue arguments of a (nearly) unitary matrix, in (-pi, pi].

    ``max_defect`` bounds the accepted unitarity defect; callers tracking a
    drifting integrator can loosen it.
    """
    u = np.asarray(matrix, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError("eigenphases expects a square matrix")
    defect = unitarity_defect(u)
    if defect > max_defect:
        raise ValueError(f"matrix is not unitary (defect {defect:.3g} > {max_defect:.3g})")
    w = np.linalg.eigvals(u)
    phases = np.angle(w)
    phases[phases <= -np.pi] += _TWO_PI  # arctan2 yields [-pi, pi]; move -pi to +pi
    return np.sort(phases)


def wasserstein_order_stat(xs, ys, p: float = 1.0, normalized: bool = False) -> float:
    """Order-statistics Wasserstein distance between equal-size 1-D samples.

    (sum_i |x_(i) - y_(i)|^p)^(1/p) over the sorted samples, which realizes
    the optimal-transport distance exactly for equal-size empirical
    measures. ``normalized=True`` divides the sum by the sample size before
    taking the root (a per-point variant; the default is the plain sum).
    """
    xs = np.sort(np.asarray(xs, dtype=float))
    ys = np.sort(np.asarray(ys, dtype=float))
    if xs.ndim != 1 or ys.ndim != 1:
        raise ValueError("samples must be one-dimensional")
    if xs.shape != ys.shape:
        raise ValueError("samples must have equal length")
    if xs.size == 0:
        raise ValueError("samples must be non-empty")
    if p < 1:
        raise ValueError("order p must be at least 1")
    total = np.sum(np.abs(xs - ys) ** p)
    if normalized:
        total /= xs.size
    return float(total ** (1.0 / p))


def wasserstein_to_cue(phases, reference) -> float:
    """Order-1 Wasserstein distance between two sorted eigenphase samples."""
    return wasserstein_order_stat(phases, reference, p=1.0)


@dataclass(frozen=True)
class TrajectoryFrame:
    """Eigenphases at one time, index-matched to the previous frame.

    Values are unwrapped for continuity, so they may leave (-pi, pi].
    """

    time: float
    phases: np.ndarray


def _wrap_angle(x):
    """Map angles to (-pi, pi]."""
    wrapped = np.mod(np.asarray(x, dtype=float) + np.pi, _TWO_PI) - np.pi
    return np.where(wrapped == -np.pi, np.pi, wrapped)


def match_trajectories(prev: TrajectoryFrame, next_phases, time: float | None = None,
                       method: str = "greedy") -> TrajectoryFrame:
    """Continue trajectories through one step.

    Each new phase is assigned to the previous trajectory nearest on the
    circle (greedy minimal-distance pairing; ``method='optimal'`` solves the
    full assignment instead). The matched value extends the previous one by
    the signed circular difference, so a trajectory stepping across the
    +/-pi seam keeps moving smoothly instead of jumping by 2 pi.
    """
    prev_phases = np.asarray(prev.phases, dtype=float)
    nxt = np.asarray(next_phases, dtype=float)
    if prev_phases.shape != nxt.shape:
        raise ValueError("frames must have equal length")
    n = nxt.size
    delta = _wrap_angle(nxt[None, :] - prev_phases[:, None])
    cost = np.abs(delta)
    if method == "optimal":
        rows, cols = linear_sum_assignment(cost)
        assignment = np.empty(n, dtype=int)
        assignment[rows] = cols
    elif method == "greedy":
        assignment = np.full(n, -1, dtype=int)
        taken = np.zeros(n, dtype=bool)
        placed = 0
        for flat in np.argsort(cost, axis=None, kind="stable"):
            i, j = divmod(int(flat), n)
            if assignment[i] < 0 and not taken[j]:
                assignment[i] = j
                taken[j] = True
                placed += 1
                if placed == n:
                    break
    else:
        raise ValueError(f"unknown matching method {method!r}")
    continued = prev_phases + delta[np.arange(n), assignment]
    new_time = prev.time if time is None else float(time)
    return TrajectoryFrame(time=new_time, phases=continued)
