"""Circuit IR and JSON format tests."""

import json

import numpy as np
import pytest

from spacerq.circuits import (
    GATES_1Q,
    GATES_2Q,
    Gate1Q,
    Gate2Q,
    LogicalCircuit,
    PhysicalCircuit,
    SwapGate,
    WaitGate,
    circuit_from_dict,
    circuit_to_dict,
    document_is_physical,
    dumps_circuit,
    loads_circuit,
)
from spacerq.errors import CircuitFormatError, UnsupportedGateError

BELL_TEXT = json.dumps(
    {
        "qubits": 2,
        "gates": [
            {"op": "1q", "target": 1, "name": "h"},
            {"op": "2q", "target": [1, 2], "name": "cnot"},
        ],
    }
)


def test_named_gates_resolve_to_matrices():
    c = loads_circuit(BELL_TEXT)
    assert isinstance(c, LogicalCircuit)
    assert c.n_qubits == 2
    assert np.array_equal(c.gates[0].matrix, GATES_1Q["h"])
    assert np.array_equal(c.gates[1].matrix, GATES_2Q["cnot"])


def test_matrix_entry_overrides_name():
    doc = {
        "qubits": 1,
        "gates": [
            {
                "op": "1q",
                "target": 1,
                "name": "h",
                "matrix": [[0, 0], [1, 0], [1, 0], [0, 0]],  # actually X
            }
        ],
    }
    c = circuit_from_dict(doc)
    assert np.array_equal(c.gates[0].matrix, GATES_1Q["x"])


def test_json_round_trip_preserves_circuit():
    original = LogicalCircuit(
        3,
        (
            Gate1Q(2, GATES_1Q["x"], "x"),
            Gate2Q(2, GATES_2Q["cz"], "cz"),
            WaitGate(4),
            Gate1Q(1, np.array([[1, 0], [0, 1j]]), None),
        ),
    )
    again = loads_circuit(dumps_circuit(original))
    assert again == original


def test_round_trip_keeps_names_but_not_fake_names():
    # a gate whose name disagrees with its matrix must serialise the matrix
    g = Gate1Q(1, GATES_1Q["x"], "h")
    doc = circuit_to_dict(LogicalCircuit(1, (g,)))
    assert "matrix" in doc["gates"][0]
    assert "name" not in doc["gates"][0]


def test_physical_round_trip_with_swaps():
    original = PhysicalCircuit(4, (SwapGate(2), Gate2Q(2, GATES_2Q["cnot"], "cnot"), SwapGate(2)))
    again = loads_circuit(dumps_circuit(original), physical=True)
    assert again == original
    assert document_is_physical(dumps_circuit(original))
    assert not document_is_physical(BELL_TEXT)


def test_bad_json_reports_line_and_column():
    with pytest.raises(CircuitFormatError) as err:
        loads_circuit('{"qubits": 2,\n "gates": [}]}')
    assert err.value.line == 2
    assert err.value.column is not None
    assert "line 2" in str(err.value)


def test_swap_rejected_in_logical_document():
    text = json.dumps({"qubits": 2, "gates": [{"op": "swap", "target": [1, 2]}]})
    with pytest.raises(UnsupportedGateError):
        loads_circuit(text)
    # but fine when parsed as a physical circuit
    assert loads_circuit(text, physical=True).gates[0] == SwapGate(1)


@pytest.mark.parametrize(
    "doc",
    [
        {"qubits": 2},
        {"gates": []},
        {"qubits": 0, "gates": []},
        {"qubits": 2, "gates": [{"target": 1}]},
        {"qubits": 2, "gates": [{"op": "teleport", "target": 1}]},
        {"qubits": 2, "gates": [{"op": "1q", "target": 1}]},  # no name, no matrix
        {"qubits": 2, "gates": [{"op": "2q", "target": [1, 3], "name": "cz"}]},  # not adjacent
        {"qubits": 2, "gates": [{"op": "2q", "target": "12", "name": "cz"}]},
        {"qubits": 2, "gates": [{"op": "wait"}]},
        {"qubits": 2, "gates": [{"op": "wait", "steps": -1}]},
        {"qubits": 2, "gates": [{"op": "1q", "target": 1, "matrix": [[1, 0]]}]},
        {"qubits": 2, "gates": [{"op": "1q", "target": 1, "matrix": [[1, 0], [0, 0], [0, 0], [2, 0]]}]},
        {"qubits": 2, "gates": "h"},
    ],
)
def test_malformed_documents_raise_format_errors(doc):
    with pytest.raises(CircuitFormatError):
        circuit_from_dict(doc)


def test_unknown_gate_name_is_unsupported_not_malformed():
    doc = {"qubits": 2, "gates": [{"op": "1q", "target": 1, "name": "t"}]}
    with pytest.raises(UnsupportedGateError):
        circuit_from_dict(doc)


def test_gate_constructors_enforce_unitarity_and_bounds():
    with pytest.raises(ValueError):
        Gate1Q(1, np.array([[1, 0], [0, 2]]))
    with pytest.raises(ValueError):
        Gate1Q(0, GATES_1Q["h"])
    with pytest.raises(ValueError):
        Gate2Q(1, np.eye(3))
    with pytest.raises(ValueError):
        WaitGate(-1)
    with pytest.raises(ValueError):
        LogicalCircuit(2, (Gate1Q(3, GATES_1Q["h"]),))
    with pytest.raises(ValueError):
        PhysicalCircuit(2, (SwapGate(2),))  # pair (2,3) off the end


def test_logical_circuit_rejects_bare_swaps():
    with pytest.raises(UnsupportedGateError):
        LogicalCircuit(2, (SwapGate(1),))


def test_step_count_counts_wait_steps_individually():
    c = LogicalCircuit(
        2,
        (Gate1Q(1, GATES_1Q["h"], "h"), WaitGate(5), Gate2Q(1, GATES_2Q["cz"], "cz"), WaitGate(0)),
    )
    assert c.step_count == 1 + 5 + 1 + 0


def test_wait_zero_round_trips():
    c = loads_circuit(json.dumps({"qubits": 1, "gates": [{"op": "wait", "steps": 0}]}))
    assert c.gates[0] == WaitGate(0)
    assert c.step_count == 0
