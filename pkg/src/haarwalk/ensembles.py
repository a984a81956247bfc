"""Random-matrix ensembles: complex Ginibre, Gaussian Hermitian, Haar unitaries.

All samplers are pure functions of (arguments, seed): calling twice with the
same RngSeed returns bitwise-identical arrays.
"""

from __future__ import annotations

import numpy as np

from .rng import RngSeed

# |R_kk| below this is treated as a degenerate QR diagonal (probability zero).
_QR_DIAG_FLOOR = 1e-300
_MAX_RESAMPLES = 8


def sample_ginibre(n: int, variance_per_component: float, seed: RngSeed) -> np.ndarray:
    """n x n matrix with i.i.d. complex Gaussian entries.

    Real and imaginary parts of every entry are independent draws from
    Normal(0, variance_per_component).
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    if variance_per_component <= 0:
        raise ValueError("variance_per_component must be positive")
    rng = seed.generator()
    scale = np.sqrt(variance_per_component)
    re = rng.normal(0.0, scale, size=(n, n))
    im = rng.normal(0.0, scale, size=(n, n))
    return re + 1j * im


def sample_hermitian(n: int, variance_per_component: float, seed: RngSeed) -> np.ndarray:
    """(A + A†)/2 for a fresh Ginibre draw A.

    The symmetrization is exact in floating point (complex addition is
    componentwise and commutative), so H[i, j] == conj(H[j, i]) holds with
    no tolerance and the diagonal is exactly real.
    """
    a = sample_ginibre(n, variance_per_component, seed)
    return (a + a.conj().T) / 2


def unitarize(matrix: np.ndarray) -> np.ndarray:
    """Re-unitarize via QR with the R-diagonal phase fix Q * diag(R_kk/|R_kk|)."""
    q, r = np.linalg.qr(matrix)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def sample_haar_unitary(n: int, seed: RngSeed, phase_fix: bool = True) -> np.ndarray:
    """Haar-distributed n x n unitary from QR of a Ginibre sample.

    The phase correction Lambda = diag(R_kk / |R_kk|) makes the QR
    factorization unique, which is what puts Q on the Haar measure; the raw
    factor Q alone is detectably non-uniform. ``phase_fix=False`` exposes
    the uncorrected Q so tests can guard against regressing to it.
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    current = seed
    for attempt in range(_MAX_RESAMPLES):
        rng = current.generator()
        a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        q, r = np.linalg.qr(a)
        d = np.diagonal(r)
        if np.all(np.abs(d) >= _QR_DIAG_FLOOR):
            return q * (d / np.abs(d)) if phase_fix else q
        current = current.child(attempt + 1)  # degenerate diagonal: next sub-stream
    raise ArithmeticError("QR diagonal kept degenerating; check the inputs")


def sample_haar_state(dim: int, seed: RngSeed) -> np.ndarray:
    """Haar-random pure state: a normalized vector of i.i.d. complex Gaussians.

    Identical in distribution to the first column of a Haar unitary (uniform
    on the unit sphere), without the O(n^3) factorization, so large-dimension
    ensembles stay cheap.
    """
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    rng = seed.generator()
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)
