"""Amplitude vectors and the kernels that act on them.

States are plain complex arrays. Gate kernels address qubits with qubit 0 as
the least-significant bit of the basis index, and accept an optional trailing
batch axis so a full matrix can be pushed through the same code path column
by column.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

NORM_ATOL = 1e-10
GATE_UNITARITY_ATOL = 1e-10


def basis_state(dim: int, index: int = 0) -> np.ndarray:
    """Computational basis vector |index> in the given dimension."""
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} out of range for dim {dim}")
    amps = np.zeros(dim, dtype=complex)
    amps[index] = 1.0
    return amps


def uniform_state(dim: int) -> np.ndarray:
    """Equal-weight superposition of all dim basis states."""
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    return np.full(dim, 1.0 / np.sqrt(dim), dtype=complex)


def norm_defect(amps: np.ndarray) -> float:
    """|sum |a_i|^2 - 1| of an amplitude vector."""
    return float(abs(np.sum(np.abs(amps) ** 2) - 1.0))


def num_qubits_of(amps: np.ndarray) -> int:
    """Qubit count of a state whose length must be a power of two."""
    dim = amps.shape[0]
    n = int(dim).bit_length() - 1
    if dim < 2 or (1 << n) != dim:
        raise ValueError(f"amplitude length {dim} is not a power of two >= 2")
    return n


def _gate_defect(m: np.ndarray) -> float:
    return float(np.abs(m.conj().T @ m - np.eye(m.shape[0])).max())


def apply_single_qubit(state: np.ndarray, gate: np.ndarray, qubit: int) -> np.ndarray:
    """Apply a 2x2 unitary to one qubit of a state (or batch of columns)."""
    state = np.asarray(state, dtype=complex)
    n = num_qubits_of(state)
    if not 0 <= qubit < n:
        raise ValueError(f"qubit {qubit} out of range for {n} qubits")
    gate = np.asarray(gate, dtype=complex)
    if gate.shape != (2, 2):
        raise ValueError("single-qubit gate must be 2x2")
    if _gate_defect(gate) > GATE_UNITARITY_ATOL:
        raise ValueError("gate matrix is not unitary")
    tensor = state.reshape((2,) * n + state.shape[1:])
    axis = n - 1 - qubit
    tensor = np.tensordot(gate, tensor, axes=([1], [axis]))
    tensor = np.moveaxis(tensor, 0, axis)
    return np.ascontiguousarray(tensor).reshape(state.shape)


def apply_fsim(state: np.ndarray, theta: float, phi: float,
               qubit_a: int, qubit_b: int) -> np.ndarray:
    """Apply fsim(theta, phi) to a pair of distinct qubits.

    |00> is untouched, |01> and |10> mix with amplitudes cos(theta) and
    -i sin(theta), and |11> picks up exp(-i phi).
    """
    state = np.asarray(state, dtype=complex)
    n = num_qubits_of(state)
    for q in (qubit_a, qubit_b):
        if not 0 <= q < n:
            raise ValueError(f"qubit {q} out of range for {n} qubits")
    if qubit_a == qubit_b:
        raise ValueError("fsim requires two distinct qubits")
    tensor = state.reshape((2,) * n + state.shape[1:]).copy()
    ndim = tensor.ndim
    ax_a, ax_b = n - 1 - qubit_a, n - 1 - qubit_b

    def block(bit_a, bit_b):
        ix = [slice(None)] * ndim
        ix[ax_a], ix[ax_b] = bit_a, bit_b
        return tuple(ix)

    c, s = np.cos(theta), np.sin(theta)
    t01 = tensor[block(0, 1)].copy()
    t10 = tensor[block(1, 0)].copy()
    tensor[block(0, 1)] = c * t01 - 1j * s * t10
    tensor[block(1, 0)] = -1j * s * t01 + c * t10
    tensor[block(1, 1)] = np.exp(-1j * phi) * tensor[block(1, 1)]
    return tensor.reshape(state.shape)


def qft(amps: np.ndarray) -> np.ndarray:
    """Unitary discrete Fourier transform of the amplitude vector.

    y_k = N^{-1/2} sum_j exp(+2 pi i j k / N) x_j; works for any length N,
    not just powers of two.
    """
    return np.fft.ifft(np.asarray(amps, dtype=complex), norm="ortho")


def qft_inverse(amps: np.ndarray) -> np.ndarray:
    """Inverse of :func:`qft` (minus-sign exponent, same normalization)."""
    return np.fft.fft(np.asarray(amps, dtype=complex), norm="ortho")


def save_amplitudes(path, amps, fmt: str | None = None) -> None:
    """Write amplitudes to a file.

    CSV holds one ``re,im`` line per amplitude; JSON holds an array of
    [re, im] pairs. Floats are written with 17 significant digits so a
    round trip is exact.
    """
    path = Path(path)
    fmt = fmt or _infer_format(path)
    amps = np.asarray(amps, dtype=complex)
    if fmt == "csv":
        lines = [f"{a.real:.17g},{a.imag:.17g}" for a in amps]
        path.write_text("\n".join(lines) + "\n")
    elif fmt == "json":
        path.write_text(json.dumps([[a.real, a.imag] for a in amps]) + "\n")
    else:
        raise ValueError(f"unsupported amplitude format {fmt!r}")


def load_amplitudes(path, fmt: str | None = None) -> np.ndarray:
    """Read an amplitude vector written by :func:`save_amplitudes`."""
    path = Path(path)
    fmt = fmt or _infer_format(path)
    if fmt == "csv":
        pairs = []
        for line in path.read_text().splitlines():
            line = line.strip()
            if not line:
                continue
            re_part, im_part = line.split(",")
            pairs.append(complex(float(re_part), float(im_part)))
        return np.array(pairs, dtype=complex)
    if fmt == "json":
        data = json.loads(path.read_text())
        return np.array([complex(re, im) for re, im in data], dtype=complex)
    raise ValueError(f"unsupported amplitude format {fmt!r}")


def _infer_format(path: Path) -> str:
    suffix = path.suffix.lower().lstrip(".")
    if suffix in ("csv", "json"):
        return suffix
    raise ValueError(f"cannot infer amplitude format from {path.name!r}")
