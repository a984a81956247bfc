"""Gate matrices for the random-circuit protocol.

The single-qubit set is {sqrt(X), sqrt(Y), sqrt(W)} with W = (X + Y)/sqrt(2).
X, Y and W are Hermitian involutions, so their principal square roots have
the closed form ((1+i) I + (1-i) G) / 2, which maps eigenvalue +1 to 1 and
-1 to i. Those exact constants are embedded below.
"""

from __future__ import annotations

import numpy as np

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_W = (PAULI_X + PAULI_Y) / np.sqrt(2)

_I2 = np.eye(2, dtype=complex)


def _principal_root_of_involution(g: np.ndarray) -> np.ndarray:
    return ((1 + 1j) * _I2 + (1 - 1j) * g) / 2


SQRT_X = _principal_root_of_involution(PAULI_X)
SQRT_Y = _principal_root_of_involution(PAULI_Y)
SQRT_W = _principal_root_of_involution(PAULI_W)

# Ordered registry; the order fixes how seeded gate choices map to indices.
SINGLE_QUBIT_GATES = {
    "sqrt_x": SQRT_X,
    "sqrt_y": SQRT_Y,
    "sqrt_w": SQRT_W,
}

DEFAULT_FSIM_THETA = np.pi / 2
DEFAULT_FSIM_PHI = np.pi / 6


def fsim_matrix(theta: float, phi: float) -> np.ndarray:
    """4x4 fsim gate on the ordered two-qubit basis (|00>, |01>, |10>, |11>).

    Identity on |00>, a cos/-i sin rotation mixing |01> and |10>, and the
    phase exp(-i phi) on |11>.
    """
    c, s = np.cos(theta), np.sin(theta)
    return np.array(
        [
            [1, 0, 0, 0],
            [0, c, -1j * s, 0],
            [0, -1j * s, c, 0],
            [0, 0, 0, np.exp(-1j * phi)],
        ],
        dtype=complex,
    )
