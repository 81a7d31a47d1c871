"""Circuit IR shared by the rewrite pass and the simulator, plus JSON I/O.

Logical circuits hold one-qubit gates, nearest-neighbour two-qubit gates
and waits over L qubits; physical circuits additionally hold bare swaps
and address sites of the expanded register.  All indices are 1-based.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CircuitFormatError, UnsupportedGateError

_UNITARY_TOL = 1e-12

_H = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_CZ = np.diag([1, 1, 1, -1]).astype(complex)
_CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
_SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)

GATES_1Q: dict[str, np.ndarray] = {"h": _H, "x": _X, "z": _Z}
GATES_2Q: dict[str, np.ndarray] = {"cz": _CZ, "cnot": _CNOT, "swap": _SWAP}


def _check_unitary(matrix: np.ndarray, dim: int) -> np.ndarray:
    m = np.asarray(matrix, dtype=complex)
    if m.shape != (dim, dim):
        raise ValueError(f"matrix must be {dim}x{dim}, got {m.shape}")
    if not np.allclose(m.conj().T @ m, np.eye(dim), atol=_UNITARY_TOL):
        raise ValueError("matrix is not unitary")
    return m


@dataclass(frozen=True, eq=False)
class Gate1Q:
    """Single-qubit unitary on qubit/site ``qubit``."""

    qubit: int
    matrix: np.ndarray
    name: str | None = None

    def __post_init__(self) -> None:
        if self.qubit < 1:
            raise ValueError("qubit index must be >= 1")
        object.__setattr__(self, "matrix", _check_unitary(self.matrix, 2))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Gate1Q)
            and self.qubit == other.qubit
            and self.name == other.name
            and np.array_equal(self.matrix, other.matrix)
        )


@dataclass(frozen=True, eq=False)
class Gate2Q:
    """Two-qubit unitary on the adjacent pair (qubit, qubit + 1)."""

    qubit: int
    matrix: np.ndarray
    name: str | None = None

    def __post_init__(self) -> None:
        if self.qubit < 1:
            raise ValueError("qubit index must be >= 1")
        object.__setattr__(self, "matrix", _check_unitary(self.matrix, 4))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Gate2Q)
            and self.qubit == other.qubit
            and self.name == other.name
            and np.array_equal(self.matrix, other.matrix)
        )


@dataclass(frozen=True)
class SwapGate:
    """Bare swap of adjacent sites (site, site + 1); physical circuits only."""

    site: int

    def __post_init__(self) -> None:
        if self.site < 1:
            raise ValueError("site index must be >= 1")


@dataclass(frozen=True)
class WaitGate:
    """Idle for ``steps`` basic gate times; each one is an error step."""

    steps: int

    def __post_init__(self) -> None:
        if int(self.steps) != self.steps or self.steps < 0:
            raise ValueError("steps must be a non-negative integer")


Gate = Gate1Q | Gate2Q | SwapGate | WaitGate


def _step_count(gates: tuple[Gate, ...]) -> int:
    return sum(g.steps if isinstance(g, WaitGate) else 1 for g in gates)


@dataclass(frozen=True, eq=False)
class LogicalCircuit:
    """Gate list over L logical qubits; swaps are not a logical primitive."""

    n_qubits: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be >= 1")
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if isinstance(g, SwapGate):
                raise UnsupportedGateError("bare swaps exist only at the physical level")
            if isinstance(g, Gate1Q) and g.qubit > self.n_qubits:
                raise ValueError(f"gate on qubit {g.qubit} exceeds register of {self.n_qubits}")
            if isinstance(g, Gate2Q) and g.qubit + 1 > self.n_qubits:
                raise ValueError(f"pair gate at qubit {g.qubit} exceeds register of {self.n_qubits}")

    @property
    def step_count(self) -> int:
        """Serial step count: one per gate plus one per wait step."""
        return _step_count(self.gates)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LogicalCircuit)
            and self.n_qubits == other.n_qubits
            and self.gates == other.gates
        )


@dataclass(frozen=True, eq=False)
class PhysicalCircuit:
    """Gate list over the physical register; sites are 1-indexed."""

    n_sites: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.n_sites < 1:
            raise ValueError("n_sites must be >= 1")
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if isinstance(g, Gate1Q) and g.qubit > self.n_sites:
                raise ValueError(f"gate on site {g.qubit} exceeds register of {self.n_sites}")
            if isinstance(g, Gate2Q) and g.qubit + 1 > self.n_sites:
                raise ValueError(f"pair gate at site {g.qubit} exceeds register of {self.n_sites}")
            if isinstance(g, SwapGate) and g.site + 1 > self.n_sites:
                raise ValueError(f"swap at site {g.site} exceeds register of {self.n_sites}")

    @property
    def step_count(self) -> int:
        return _step_count(self.gates)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PhysicalCircuit)
            and self.n_sites == other.n_sites
            and self.gates == other.gates
        )


# --- JSON circuit documents ---------------------------------------------
#
# {"qubits": N, "gates": [
#     {"op": "1q",   "target": k,            "name": "h" | "matrix": [[re,im] x 4]},
#     {"op": "2q",   "target": k | [k,k+1],  "name": "cz" | "matrix": [[re,im] x 16]},
#     {"op": "swap", "target": n | [n,n+1]},
#     {"op": "wait", "steps": t}]}
#
# An explicit "matrix" overrides "name".


def _matrix_from_entry(entry: dict, dim: int, where: str) -> tuple[np.ndarray, str | None]:
    name = entry.get("name")
    raw = entry.get("matrix")
    if raw is not None:
        if len(raw) != dim * dim or any(len(pair) != 2 for pair in raw):
            raise CircuitFormatError(
                f"{where}: matrix must be a flat row-major list of {dim * dim} [re, im] pairs"
            )
        flat = np.array([complex(re, im) for re, im in raw]).reshape(dim, dim)
        return flat, name if isinstance(name, str) else None
    table = GATES_1Q if dim == 2 else GATES_2Q
    if name is None:
        raise CircuitFormatError(f"{where}: gate needs a 'name' or a 'matrix'")
    if name not in table:
        raise UnsupportedGateError(f"{where}: unknown gate name {name!r}")
    return table[name], name


def _target_pair(entry: dict, where: str) -> int:
    t = entry.get("target")
    if isinstance(t, int):
        return t
    if isinstance(t, list) and len(t) == 2 and all(isinstance(x, int) for x in t):
        if t[1] != t[0] + 1:
            raise CircuitFormatError(f"{where}: pair target must be adjacent, got {t}")
        return t[0]
    raise CircuitFormatError(f"{where}: target must be an int or an adjacent pair [k, k+1]")


def circuit_from_dict(doc: dict, *, physical: bool = False) -> LogicalCircuit | PhysicalCircuit:
    """Build a circuit from a parsed JSON document."""
    if not isinstance(doc, dict) or "qubits" not in doc or "gates" not in doc:
        raise CircuitFormatError("circuit document needs 'qubits' and 'gates' keys")
    n = doc["qubits"]
    if not isinstance(n, int) or n < 1:
        raise CircuitFormatError("'qubits' must be a positive integer")
    if not isinstance(doc["gates"], list):
        raise CircuitFormatError("'gates' must be a list")
    gates: list[Gate] = []
    for i, entry in enumerate(doc["gates"]):
        where = f"gate {i}"
        if not isinstance(entry, dict) or "op" not in entry:
            raise CircuitFormatError(f"{where}: each gate needs an 'op' key")
        op = entry["op"]
        try:
            if op == "1q":
                target = entry.get("target")
                if not isinstance(target, int):
                    raise CircuitFormatError(f"{where}: '1q' target must be an int")
                matrix, name = _matrix_from_entry(entry, 2, where)
                gates.append(Gate1Q(target, matrix, name))
            elif op == "2q":
                target = _target_pair(entry, where)
                matrix, name = _matrix_from_entry(entry, 4, where)
                gates.append(Gate2Q(target, matrix, name))
            elif op == "swap":
                if not physical:
                    raise UnsupportedGateError(
                        f"{where}: bare swaps are physical-level; not valid in a logical circuit"
                    )
                gates.append(SwapGate(_target_pair(entry, where)))
            elif op == "wait":
                steps = entry.get("steps")
                if not isinstance(steps, int) or steps < 0:
                    raise CircuitFormatError(f"{where}: 'wait' needs a non-negative integer 'steps'")
                gates.append(WaitGate(steps))
            else:
                raise CircuitFormatError(f"{where}: unknown op {op!r}")
        except (ValueError, TypeError) as exc:
            if isinstance(exc, (CircuitFormatError, UnsupportedGateError)):
                raise
            raise CircuitFormatError(f"{where}: {exc}") from exc
    if physical:
        return PhysicalCircuit(n, tuple(gates))
    return LogicalCircuit(n, tuple(gates))


def circuit_to_dict(circuit: LogicalCircuit | PhysicalCircuit) -> dict:
    """Serialise a circuit; named gates keep their name, others a [re, im] matrix."""
    gates = []
    for g in circuit.gates:
        if isinstance(g, Gate1Q):
            entry: dict = {"op": "1q", "target": g.qubit}
            _put_matrix(entry, g)
        elif isinstance(g, Gate2Q):
            entry = {"op": "2q", "target": [g.qubit, g.qubit + 1]}
            _put_matrix(entry, g)
        elif isinstance(g, SwapGate):
            entry = {"op": "swap", "target": [g.site, g.site + 1]}
        else:
            entry = {"op": "wait", "steps": g.steps}
        gates.append(entry)
    n = circuit.n_sites if isinstance(circuit, PhysicalCircuit) else circuit.n_qubits
    return {"qubits": n, "gates": gates}


def _put_matrix(entry: dict, gate: Gate1Q | Gate2Q) -> None:
    table = GATES_1Q if isinstance(gate, Gate1Q) else GATES_2Q
    if gate.name is not None and gate.name in table and np.array_equal(table[gate.name], gate.matrix):
        entry["name"] = gate.name
    else:
        entry["matrix"] = [[z.real, z.imag] for z in gate.matrix.reshape(-1)]


def loads_circuit(text: str, *, physical: bool = False) -> LogicalCircuit | PhysicalCircuit:
    """Parse a circuit from JSON text, reporting line/column on bad JSON."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CircuitFormatError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    return circuit_from_dict(doc, physical=physical)


def dumps_circuit(circuit: LogicalCircuit | PhysicalCircuit) -> str:
    return json.dumps(circuit_to_dict(circuit), indent=1)


def document_is_physical(text: str) -> bool:
    """True when the JSON text uses physical-only ops (bare swaps)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CircuitFormatError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    gates = doc.get("gates", []) if isinstance(doc, dict) else []
    return any(isinstance(g, dict) and g.get("op") == "swap" for g in gates)
