"""Random circuits: seeded specs, gate-event lists, execution, dense matrices.

A circuit is m cycles of (random single-qubit layer, then fsim on every pair
of the cycle's coupler-activation pattern), optionally closed by one more
random single-qubit layer before measurement.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gates import DEFAULT_FSIM_PHI, DEFAULT_FSIM_THETA, SINGLE_QUBIT_GATES
from .rng import RngSeed
from .statevector import NORM_ATOL, apply_fsim, apply_single_qubit, norm_defect

MAX_MATRIX_QUBITS = 12


@dataclass(frozen=True)
class Chain1D:
    """Line of qubits; pattern 'even' pairs (0,1),(2,3),... and 'odd' (1,2),(3,4),..."""

    def default_patterns(self):
        return ("even", "odd")

    def pairs(self, num_qubits: int, label: str):
        starts = {"even": 0, "odd": 1}
        if label not in starts:
            raise ValueError(f"chain topology has no pattern {label!r}")
        return tuple((q, q + 1) for q in range(starts[label], num_qubits - 1, 2))


@dataclass(frozen=True)
class Grid2D:
    """rows x cols grid, row-major qubit indexing, four-way edge partition.

    Patterns 'a'/'b' are vertical couplers on even/odd rows, 'c'/'d'
    horizontal couplers on even/odd columns.
    """

    rows: int
    cols: int

    def default_patterns(self):
        return ("a", "b", "c", "d")

    def pairs(self, num_qubits: int, label: str):
        if self.rows * self.cols != num_qubits:
            raise ValueError("grid size does not match qubit count")
        out = []
        if label in ("a", "b"):
            start = 0 if label == "a" else 1
            for r in range(start, self.rows - 1, 2):
                for c in range(self.cols):
                    out.append((r * self.cols + c, (r + 1) * self.cols + c))
        elif label in ("c", "d"):
            start = 0 if label == "c" else 1
            for r in range(self.rows):
                for c in range(start, self.cols - 1, 2):
                    out.append((r * self.cols + c, r * self.cols + c + 1))
        else:
            raise ValueError(f"grid topology has no pattern {label!r}")
        return tuple(out)


@dataclass(frozen=True)
class GateEvent:
    """One gate application: which cycle, which gate, which qubit(s)."""

    cycle: int
    name: str
    qubits: tuple
    params: tuple = ()

    def __post_init__(self):
        if self.name == "fsim":
            if len(self.qubits) != 2 or self.qubits[0] == self.qubits[1]:
                raise ValueError("fsim events target two distinct qubits")
            if len(self.params) != 2:
                raise ValueError("fsim events carry (theta, phi)")
        elif self.name in SINGLE_QUBIT_GATES:
            if len(self.qubits) != 1:
                raise ValueError("single-qubit events target exactly one qubit")
        else:
            raise ValueError(f"unknown gate name {self.name!r}")


@dataclass(frozen=True)
class CircuitSpec:
    """Seeded description of a random circuit; materializes deterministically."""

    num_qubits: int
    num_cycles: int
    seed: RngSeed
    topology: Chain1D | Grid2D = Chain1D()
    pattern_sequence: tuple | None = None
    final_single_qubit_layer: bool = False
    forbid_repeats: bool = True
    fsim_theta: float = DEFAULT_FSIM_THETA
    fsim_phi: float = DEFAULT_FSIM_PHI

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValueError("num_qubits must be at least 1")
        if self.num_cycles < 0:
            raise ValueError("num_cycles must be non-negative")
        if isinstance(self.topology, Grid2D):
            if self.topology.rows * self.topology.cols != self.num_qubits:
                raise ValueError("grid rows*cols must equal num_qubits")
        patterns = self.patterns
        if len(patterns) == 0:
            raise ValueError("pattern_sequence must not be empty")
        for label in patterns:
            self.topology.pairs(self.num_qubits, label)  # rejects bad labels

    @property
    def patterns(self) -> tuple:
        if self.pattern_sequence is not None:
            return tuple(self.pattern_sequence)
        return self.topology.default_patterns()


def _random_layer(rng, num_qubits, previous, forbid_repeats):
    names = tuple(SINGLE_QUBIT_GATES)
    layer = []
    for q in range(num_qubits):
        options = [g for g in names if not (forbid_repeats and g == previous[q])]
        layer.append(options[rng.integers(len(options))])
    return layer


def build_random_circuit(spec: CircuitSpec) -> list:
    """Materialize the seeded gate sequence of a spec.

    Per cycle: one gate per qubit drawn from {sqrt_x, sqrt_y, sqrt_w} (a
    qubit never repeats its previous-cycle gate while forbid_repeats is on),
    then fsim on every pair of that cycle's activation pattern. The optional
    trailing single-qubit layer is tagged with cycle == num_cycles.
    """
    rng = spec.seed.generator()
    patterns = spec.patterns
    previous = [None] * spec.num_qubits
    events = []
    for cycle in range(spec.num_cycles):
        layer = _random_layer(rng, spec.num_qubits, previous, spec.forbid_repeats)
        for q, name in enumerate(layer):
            events.append(GateEvent(cycle, name, (q,)))
        previous = layer
        label = patterns[cycle % len(patterns)]
        for a, b in spec.topology.pairs(spec.num_qubits, label):
            events.append(GateEvent(cycle, "fsim", (a, b),
                                    (spec.fsim_theta, spec.fsim_phi)))
    if spec.final_single_qubit_layer:
        layer = _random_layer(rng, spec.num_qubits, previous, spec.forbid_repeats)
        for q, name in enumerate(layer):
            events.append(GateEvent(spec.num_cycles, name, (q,)))
    return events


def run_circuit(state: np.ndarray, events) -> np.ndarray:
    """Apply gate events in order. Norm is preserved to 1e-10."""
    out = np.asarray(state, dtype=complex)
    for ev in events:
        if ev.name == "fsim":
            out = apply_fsim(out, ev.params[0], ev.params[1],
                             ev.qubits[0], ev.qubits[1])
        else:
            out = apply_single_qubit(out, SINGLE_QUBIT_GATES[ev.name], ev.qubits[0])
    if out.ndim == 1 and norm_defect(out) > NORM_ATOL:
        raise ArithmeticError("state norm drifted beyond tolerance")
    return out


def circuit_to_matrix(circuit, num_qubits: int | None = None) -> np.ndarray:
    """Dense unitary of a spec or event list; column j is the image of |j>."""
    if isinstance(circuit, CircuitSpec):
        events = build_random_circuit(circuit)
        n = circuit.num_qubits
    else:
        events = list(circuit)
        if num_qubits is None:
            raise ValueError("num_qubits is required with a bare event list")
        n = num_qubits
    if n > MAX_MATRIX_QUBITS:
        raise ValueError(f"matrix assembly is limited to {MAX_MATRIX_QUBITS} qubits")
    dim = 2 ** n
    return run_circuit(np.eye(dim, dtype=complex), events)
