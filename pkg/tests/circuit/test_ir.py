"""
This module is used to test the circuit
representation, its layout tracking and its metrics.
"""

import pytest

from qubochain.circuit.ir import (
	Circuit,
	Gate,
	GateKind,
	permuted_layout,
)
from qubochain.circuit.metrics import depth, measure, width
from qubochain.exceptions.circuit import (
	CircuitError,
	GateArityError,
)
from qubochain.pubo.variables import x, y

# --- Test cases ---


def test_depth_examples():
	assert depth(Circuit(2)) == 0

	circuit = Circuit(2)
	circuit.h(0)
	circuit.h(1)
	assert depth(circuit) == 1

	circuit.rzz(0, 1, 0.5)
	circuit.rz(1, 0.1)
	assert depth(circuit) == 3


def test_barrier_aligns_without_a_step():
	circuit = Circuit(3)
	circuit.h(0)
	circuit.h(0)
	circuit.barrier([0, 1])
	circuit.h(1)
	circuit.h(2)

	assert depth(circuit) == 3
	assert width(circuit) == 3


def test_swap_updates_final_layout():
	circuit = Circuit(3, initial_layout={x(1): 0, y(1): 2})
	circuit.swap(0, 1)
	circuit.swap(1, 2)

	assert circuit.final_layout == {x(1): 2, y(1): 1}
	assert circuit.initial_layout == {x(1): 0, y(1): 2}
	assert circuit.occupant(1) == y(1)
	assert circuit.occupant(0) is None
	assert permuted_layout(
		circuit.initial_layout,
		circuit.gates,
	) == circuit.final_layout


def test_metrics():
	circuit = Circuit(3, initial_layout={x(1): 0, x(2): 1})
	circuit.swap(0, 1)
	circuit.rzz(1, 2, 1.0)
	circuit.rx(0, 0.3)

	metrics = measure(circuit, energy_offset=2.5)

	assert metrics.depth == 2
	assert metrics.width == 3
	assert metrics.two_qubit_count == 2
	assert metrics.swap_count == 1
	assert metrics.energy_offset == 2.5


def test_gate_validation():
	test_cases = [
		(GateKind.H, (0, 1), None),
		(GateKind.RZZ, (0,), 1.0),
		(GateKind.CZ, (1, 1), None),
		(GateKind.RZ, (0,), None),
		(GateKind.SX, (0,), 0.5),
		(GateKind.BARRIER, (), None),
	]

	for kind, qubits, param in test_cases:
		with pytest.raises(GateArityError):
			Gate(kind, qubits, param)


def test_circuit_validation():
	with pytest.raises(CircuitError):
		Circuit(2, initial_layout={x(1): 0, x(2): 0})

	with pytest.raises(CircuitError):
		Circuit(2, initial_layout={x(1): 3})

	circuit = Circuit(2)
	with pytest.raises(CircuitError):
		circuit.h(2)
