"""Shared helpers: seeded random unitaries and circuits for fuzz tests."""

import numpy as np

from spacerq.circuits import GATES_1Q, GATES_2Q, Gate1Q, Gate2Q, LogicalCircuit, WaitGate


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_state(rng: np.random.Generator, n: int) -> np.ndarray:
    z = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return z / np.linalg.norm(z)


def random_logical_circuit(rng: np.random.Generator, n_qubits: int, n_gates: int) -> LogicalCircuit:
    """Mix of named gates, random unitaries and short waits."""
    gates = []
    for _ in range(n_gates):
        kind = rng.integers(0, 5)
        if kind == 0:
            name = ("h", "x", "z")[rng.integers(0, 3)]
            gates.append(Gate1Q(int(rng.integers(1, n_qubits + 1)), GATES_1Q[name], name))
        elif kind == 1:
            gates.append(Gate1Q(int(rng.integers(1, n_qubits + 1)), random_unitary(rng, 2)))
        elif kind == 2 and n_qubits >= 2:
            name = ("cz", "cnot")[rng.integers(0, 2)]
            gates.append(Gate2Q(int(rng.integers(1, n_qubits)), GATES_2Q[name], name))
        elif kind == 3 and n_qubits >= 2:
            gates.append(Gate2Q(int(rng.integers(1, n_qubits)), random_unitary(rng, 4)))
        else:
            gates.append(WaitGate(int(rng.integers(0, 4))))
    return LogicalCircuit(n_qubits, tuple(gates))
