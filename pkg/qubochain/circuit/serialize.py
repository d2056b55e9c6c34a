"""
This module contains the circuit interchange formats:
lossless JSON and a QASM-style text listing with one
gate per line on physical qubit operands.
"""

from enum import Enum

from pydantic import ValidationError

from qubochain.circuit.ir import Circuit, Gate, GateKind, Layout
from qubochain.exceptions.circuit import (
	CircuitError,
	UnsupportedFormatError,
)
from qubochain.pubo.parser import resolve_variables
from qubochain.schemas.circuit import (
	CircuitDocument,
	GateDocument,
)


class CircuitFormat(str, Enum):
	JSON = 'json'
	QASM = 'qasm'


def _layout_document(layout: Layout) -> dict[str, int]:
	return {v.name: q for v, q in sorted(layout.items())}


def circuit_to_document(circuit: Circuit) -> CircuitDocument:
	return CircuitDocument(
		num_qubits=circuit.num_qubits,
		initial_layout=_layout_document(circuit.initial_layout),
		final_layout=_layout_document(circuit.final_layout),
		gates=[
			GateDocument(
				g=gate.kind.value,
				q=list(gate.qubits),
				p=gate.param,
			)
			for gate in circuit.gates
		],
	)


def circuit_from_document(document: CircuitDocument) -> Circuit:
	lookup = resolve_variables(
		[*document.initial_layout, *document.final_layout]
	)
	try:
		gates = [
			Gate(GateKind(g.g), tuple(g.q), g.p)
			for g in document.gates
		]
	except ValueError as e:
		raise CircuitError(f'Unknown gate: {e}') from e

	return Circuit(
		num_qubits=document.num_qubits,
		initial_layout={
			lookup[name]: q
			for name, q in document.initial_layout.items()
		},
		gates=gates,
		final_layout={
			lookup[name]: q
			for name, q in document.final_layout.items()
		},
	)


def format_angle(value: float) -> str:
	return repr(float(value))


def to_qasm_text(circuit: Circuit) -> str:
	lines = [f'qreg q[{circuit.num_qubits}];']
	for gate in circuit.gates:
		name = gate.kind.value
		if gate.param is not None:
			name = f'{name}({format_angle(gate.param)})'
		operands = ', '.join(f'q[{q}]' for q in gate.qubits)
		lines.append(f'{name} {operands};')
	return '\n'.join(lines) + '\n'


def serialize_circuit(
	circuit: Circuit,
	format: str | CircuitFormat = CircuitFormat.JSON,
) -> bytes:
	"""
	Deterministic encoding of `circuit`.

	Raises:
		UnsupportedFormatError: unknown format tag.
	"""
	try:
		fmt = CircuitFormat(format)
	except ValueError as e:
		raise UnsupportedFormatError(
			f'Unsupported circuit format {format!r}',
			format=str(format),
		) from e

	match fmt:
		case CircuitFormat.JSON:
			text = circuit_to_document(circuit).model_dump_json(
				exclude_none=True
			)
		case CircuitFormat.QASM:
			text = to_qasm_text(circuit)

	return text.encode('utf-8')


def load_circuit(data: str | bytes) -> Circuit:
	try:
		document = CircuitDocument.model_validate_json(data)
	except ValidationError as e:
		raise CircuitError(
			f'Malformed circuit JSON: {e.error_count()} error(s)'
		) from e
	return circuit_from_document(document)
