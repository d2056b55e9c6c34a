"""
This module contains the circuit metrics: depth under
as-soon-as-possible layering, width, two-qubit gate
count and SWAP count.
"""

from pydantic import BaseModel, ConfigDict, Field

from qubochain.circuit.ir import Circuit, GateKind


class Metrics(BaseModel):
	"""Measured properties of a compiled circuit."""

	model_config = ConfigDict(extra='forbid')

	depth: int = Field(..., ge=0)
	width: int = Field(
		...,
		ge=0,
		description='Distinct qubits touched by a gate.',
	)
	two_qubit_count: int = Field(..., ge=0)
	swap_count: int = Field(
		...,
		ge=0,
		description='SWAPs inserted before decomposition.',
	)
	energy_offset: float = Field(
		default=0.0,
		description=(
			'Constant QUBO term dropped from the circuit.'
		),
	)


def depth(circuit: Circuit) -> int:
	"""
	Critical path length with unit-time gates placed
	greedily in program order. A barrier aligns the
	qubits it spans without taking a time step.
	"""
	level: dict[int, int] = {}
	for gate in circuit.gates:
		start = max(level.get(q, 0) for q in gate.qubits)
		end = start if gate.kind is GateKind.BARRIER else start + 1
		for q in gate.qubits:
			level[q] = end
	return max(level.values(), default=0)


def width(circuit: Circuit) -> int:
	return len(
		{
			q
			for gate in circuit.gates
			if gate.kind is not GateKind.BARRIER
			for q in gate.qubits
		}
	)


def two_qubit_count(circuit: Circuit) -> int:
	return sum(1 for g in circuit.gates if g.is_two_qubit)


def measure(
	circuit: Circuit,
	*,
	swap_count: int | None = None,
	energy_offset: float = 0.0,
) -> Metrics:
	"""
	Metrics of `circuit`. Pass `swap_count` when the
	circuit has already been decomposed.
	"""
	return Metrics(
		depth=depth(circuit),
		width=width(circuit),
		two_qubit_count=two_qubit_count(circuit),
		swap_count=(
			circuit.count(GateKind.SWAP)
			if swap_count is None
			else swap_count
		),
		energy_offset=energy_offset,
	)
